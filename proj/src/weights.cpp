#include "mdt/weights.hpp"

#include "mdt/errors.hpp"
#include "mdt/kernels.hpp"

#include <limits>

namespace mdt {

WeightTable::WeightTable(int d, int n)
    : WeightTable(d, n, std::vector<Rat>(static_cast<std::size_t>(d) * static_cast<std::size_t>(n))) {}

WeightTable::WeightTable(int d, int n, std::vector<Rat> weights) : d_(d), n_(n), w_(std::move(weights)) {
    if (d < 1 || n < 1) throw ShapeError("weight table needs d >= 1 and n >= 1");
    if (w_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(n)) {
        throw ShapeError("weight table must hold d*n entries");
    }
}

Rat WeightTable::total() const {
    Rat sum(0);
    for (const auto& w : w_) sum += w;
    return sum;
}

bool WeightTable::nonnegative() const {
    for (const auto& w : w_) {
        if (w.sign() < 0) return false;
    }
    return true;
}

Rat WeightTable::coverage(const Index& alpha) const {
    if (alpha.size() != static_cast<std::size_t>(d_)) throw ShapeError("index does not match table");
    Rat sum(0);
    for (int i = 0; i < d_; ++i) {
        const int c = alpha[static_cast<std::size_t>(i)];
        if (c < 0 || c >= n_) throw RangeError("index coordinate out of range");
        sum += at(i, c);
    }
    return sum;
}

namespace {

struct Scaled {
    std::vector<std::int64_t> table;
    std::int64_t threshold = 0;
};

// Scales every weight by the common denominator; fails when the scaled
// values or any possible incidence sum leave the int64 range.
bool scale(const WeightTable& t, Scaled& out) {
    BigInt lcd(1);
    for (const auto& w : t.values()) lcd = lcm(lcd, w.den());
    const BigInt limit = BigInt(1) << 62;
    if (lcd >= limit) return false;
    BigInt worst(0);
    out.table.resize(t.values().size());
    for (int i = 0; i < t.dim(); ++i) {
        BigInt row_max(0);
        for (int j = 0; j < t.order(); ++j) {
            const Rat& w = t.at(i, j);
            BigInt v = w.num() * (lcd / w.den());
            if (abs(v) >= limit) return false;
            if (abs(v) > row_max) row_max = abs(v);
            out.table[static_cast<std::size_t>(i) * t.order() + j] = v.get_si();
        }
        worst += row_max;
    }
    if (worst >= limit) return false;
    out.threshold = lcd.get_si();
    return true;
}

}  // namespace

bool fits_integer_kernel(const WeightTable& table) {
    Scaled s;
    return scale(table, s);
}

std::vector<std::uint8_t> coverage_bits(const WeightTable& table) {
    Scaled s;
    if (!scale(table, s)) return coverage_bits_exact(table);
    const MultiMatrix shape(table.dim(), table.order());
    std::vector<std::int64_t> sums(shape.size());
    std::vector<std::uint8_t> bits(shape.size());
    const auto& k = kernels::active();
    k.incidence_sums(s.table, table.dim(), table.order(), sums);
    k.threshold_bits(sums, s.threshold, bits);
    return bits;
}

std::vector<std::uint8_t> coverage_bits_exact(const WeightTable& table) {
    const int d = table.dim();
    const int n = table.order();
    const MultiMatrix shape(d, n);
    std::vector<Rat> sums(shape.size());
    std::size_t block = 1;
    for (int k = d - 1; k >= 0; --k) {
        for (int j = n - 1; j >= 0; --j) {
            for (std::size_t b = 0; b < block; ++b) {
                sums[static_cast<std::size_t>(j) * block + b] = sums[b] + table.at(k, j);
            }
        }
        block *= static_cast<std::size_t>(n);
    }
    std::vector<std::uint8_t> bits(sums.size());
    const Rat one(1);
    for (std::size_t a = 0; a < sums.size(); ++a) bits[a] = sums[a] >= one ? 1 : 0;
    return bits;
}

}  // namespace mdt
