#pragma once

#include "mdt/matrix.hpp"
#include "mdt/rational.hpp"

#include <cstdint>
#include <vector>

namespace mdt {

/// d x n table of hyperplane weights lambda[i][j].
class WeightTable {
public:
    WeightTable(int d, int n);
    WeightTable(int d, int n, std::vector<Rat> weights);

    int dim() const { return d_; }
    int order() const { return n_; }

    const Rat& at(int direction, int coordinate) const {
        return w_[static_cast<std::size_t>(direction) * n_ + coordinate];
    }
    Rat& at(int direction, int coordinate) {
        return w_[static_cast<std::size_t>(direction) * n_ + coordinate];
    }
    const std::vector<Rat>& values() const { return w_; }

    Rat total() const;
    bool nonnegative() const;
    /// Incident weight sum for one index.
    Rat coverage(const Index& alpha) const;

    friend bool operator==(const WeightTable&, const WeightTable&) = default;

private:
    int d_;
    int n_;
    std::vector<Rat> w_;
};

/// bits[alpha] = 1 iff the incident weights of alpha sum to >= 1. Runs on
/// the integer kernels after scaling to a common denominator when the
/// scaled sums fit in 63 bits, otherwise falls back to exact rationals.
std::vector<std::uint8_t> coverage_bits(const WeightTable& table);
/// Always the exact rational route; reference for coverage_bits.
std::vector<std::uint8_t> coverage_bits_exact(const WeightTable& table);
/// True when coverage_bits(table) would use the integer kernels.
bool fits_integer_kernel(const WeightTable& table);

}  // namespace mdt
