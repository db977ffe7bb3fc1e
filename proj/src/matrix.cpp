#include "mdt/matrix.hpp"

#include "mdt/errors.hpp"
#include "mdt/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace mdt {
namespace {

std::size_t checked_size(int d, int n, std::size_t cap) {
    if (d < 1) throw ShapeError("matrix dimension must be >= 1");
    if (n < 1) throw ShapeError("matrix order must be >= 1");
    std::size_t size = 1;
    for (int i = 0; i < d; ++i) {
        if (size > cap / static_cast<std::size_t>(n)) {
            throw ShapeError("matrix with n^d = " + std::to_string(n) + "^" + std::to_string(d) +
                             " entries exceeds the entry cap");
        }
        size *= static_cast<std::size_t>(n);
    }
    return size;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Walks target indices beta in lexicographic order; visit(target_offset,
// source_offset) where source_offset = sum_t contrib[t][beta_t]. Stops
// early when visit returns false. Returns the number of entries visited.
template <typename Visit>
std::size_t walk(int d, int n, std::size_t size, const std::vector<std::size_t>& contrib,
                 Visit visit) {
    std::vector<int> digits(static_cast<std::size_t>(d), 0);
    std::size_t source = 0;
    for (int t = 0; t < d; ++t) source += contrib[static_cast<std::size_t>(t) * n];
    for (std::size_t target = 0; target < size; ++target) {
        if (!visit(target, source)) return target + 1;
        for (int t = d - 1; t >= 0; --t) {
            const std::size_t row = static_cast<std::size_t>(t) * n;
            int& v = digits[static_cast<std::size_t>(t)];
            source -= contrib[row + v];
            if (++v < n) {
                source += contrib[row + v];
                break;
            }
            v = 0;
            source += contrib[row];
        }
    }
    return size;
}

// contrib[t*n + v] = source offset contribution of target coordinate v in
// target direction t, for the transform (sigma, pi).
std::vector<std::size_t> inverse_contrib(const MultiMatrix& a, const std::vector<int>& sigma,
                                         const std::vector<const std::vector<int>*>& pis) {
    const int d = a.dim();
    const int n = a.order();
    std::vector<std::size_t> contrib(static_cast<std::size_t>(d) * n);
    for (int i = 0; i < d; ++i) {
        const auto& pi = *pis[static_cast<std::size_t>(i)];
        const int t = sigma[static_cast<std::size_t>(i)];
        for (int v = 0; v < n; ++v) {
            contrib[static_cast<std::size_t>(t) * n + pi[static_cast<std::size_t>(v)]] =
                a.stride(i) * static_cast<std::size_t>(v);
        }
    }
    return contrib;
}

void require_same_shape(const MultiMatrix& a, const MultiMatrix& b) {
    if (a.dim() != b.dim() || a.order() != b.order()) {
        throw ShapeError("matrices differ in dimension or order");
    }
}

}  // namespace

MultiMatrix::MultiMatrix(int d, int n, std::size_t entry_cap)
    : MultiMatrix(d, n, std::vector<std::uint8_t>(checked_size(d, n, entry_cap), 0), entry_cap) {}

MultiMatrix::MultiMatrix(int d, int n, std::vector<std::uint8_t> bits, std::size_t entry_cap)
    : d_(d), n_(n), bits_(std::move(bits)) {
    const std::size_t size = checked_size(d, n, entry_cap);
    if (bits_.size() != size) {
        throw ShapeError("bit count " + std::to_string(bits_.size()) + " != n^d = " +
                         std::to_string(size));
    }
    for (auto& b : bits_) {
        if (b > 1) throw ShapeError("matrix entries must be 0 or 1");
    }
    strides_.assign(static_cast<std::size_t>(d), 1);
    for (int i = d - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * static_cast<std::size_t>(n);
}

MultiMatrix MultiMatrix::full(int d, int n) {
    MultiMatrix m(d, n);
    std::fill(m.bits_.begin(), m.bits_.end(), 1);
    return m;
}

MultiMatrix MultiMatrix::from_support(int d, int n, const std::vector<Index>& support) {
    MultiMatrix m(d, n);
    for (const auto& alpha : support) m.set(alpha, true);
    return m;
}

MultiMatrix MultiMatrix::from_string(int d, int n, std::string_view bits) {
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("bit string may contain only '0' and '1'");
        out.push_back(c == '1' ? 1 : 0);
    }
    return MultiMatrix(d, n, std::move(out));
}

std::string MultiMatrix::bit_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k]) s[k] = '1';
    }
    return s;
}

MultiMatrix MultiMatrix::with_entry(std::size_t offset, bool value) const {
    MultiMatrix copy = *this;
    copy.set(offset, value);
    return copy;
}

std::size_t MultiMatrix::offset_of(const Index& alpha) const {
    if (alpha.size() != static_cast<std::size_t>(d_)) {
        throw RangeError("index has " + std::to_string(alpha.size()) + " coordinates, expected " +
                         std::to_string(d_));
    }
    std::size_t off = 0;
    for (int i = 0; i < d_; ++i) {
        const int c = alpha[static_cast<std::size_t>(i)];
        if (c < 0 || c >= n_) throw RangeError("index coordinate out of range");
        off += strides_[static_cast<std::size_t>(i)] * static_cast<std::size_t>(c);
    }
    return off;
}

Index MultiMatrix::index_of(std::size_t offset) const {
    if (offset >= bits_.size()) throw RangeError("offset out of range");
    Index alpha(static_cast<std::size_t>(d_));
    for (int i = d_ - 1; i >= 0; --i) {
        alpha[static_cast<std::size_t>(i)] = static_cast<int>(offset % static_cast<std::size_t>(n_));
        offset /= static_cast<std::size_t>(n_);
    }
    return alpha;
}

std::size_t MultiMatrix::support_size() const { return kernels::active().count_ones(bits_); }

std::vector<Index> MultiMatrix::support() const {
    std::vector<Index> out;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k]) out.push_back(index_of(k));
    }
    return out;
}

std::strong_ordering operator<=>(const MultiMatrix& a, const MultiMatrix& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
}

std::string Profile::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (i) os << ',';
        os << '(';
        for (std::size_t j = 0; j < rates[i].size(); ++j) {
            if (j) os << ',';
            os << rates[i][j];
        }
        os << ')';
    }
    os << ')';
    return os.str();
}

Transform Transform::identity(int d, int n) {
    Transform t;
    t.direction_perm.resize(static_cast<std::size_t>(d));
    std::iota(t.direction_perm.begin(), t.direction_perm.end(), 0);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    t.coordinate_perms.assign(static_cast<std::size_t>(d), id);
    return t;
}

MultiMatrix Transform::apply(const MultiMatrix& a) const {
    const int d = a.dim();
    const int n = a.order();
    if (direction_perm.size() != static_cast<std::size_t>(d) ||
        coordinate_perms.size() != static_cast<std::size_t>(d)) {
        throw ShapeError("transform does not match matrix dimension");
    }
    std::vector<const std::vector<int>*> pis;
    for (const auto& p : coordinate_perms) {
        if (p.size() != static_cast<std::size_t>(n)) throw ShapeError("transform does not match order");
        pis.push_back(&p);
    }
    const auto contrib = inverse_contrib(a, direction_perm, pis);
    std::vector<std::uint8_t> out(a.size());
    const auto src = a.bits();
    walk(d, n, a.size(), contrib, [&](std::size_t target, std::size_t source) {
        out[target] = src[source];
        return true;
    });
    return MultiMatrix(d, n, std::move(out));
}

std::vector<Index> hyperplane_indices(const MultiMatrix& a, int direction, int coordinate) {
    if (direction < 0 || direction >= a.dim()) throw RangeError("direction out of range");
    if (coordinate < 0 || coordinate >= a.order()) throw RangeError("coordinate out of range");
    std::vector<Index> out;
    const std::size_t inner = a.stride(direction);
    const std::size_t period = inner * static_cast<std::size_t>(a.order());
    for (std::size_t base = 0; base < a.size(); base += period) {
        const std::size_t start = base + inner * static_cast<std::size_t>(coordinate);
        for (std::size_t k = 0; k < inner; ++k) out.push_back(a.index_of(start + k));
    }
    return out;
}

std::int64_t rate(const MultiMatrix& a, int direction, int coordinate) {
    if (direction < 0 || direction >= a.dim()) throw RangeError("direction out of range");
    if (coordinate < 0 || coordinate >= a.order()) throw RangeError("coordinate out of range");
    const auto& k = kernels::active();
    const auto bits = a.bits();
    const std::size_t inner = a.stride(direction);
    const std::size_t period = inner * static_cast<std::size_t>(a.order());
    std::size_t total = 0;
    for (std::size_t base = 0; base < a.size(); base += period) {
        total += k.count_ones(bits.subspan(base + inner * static_cast<std::size_t>(coordinate), inner));
    }
    return static_cast<std::int64_t>(total);
}

std::vector<std::vector<std::int64_t>> rate_table(const MultiMatrix& a) {
    std::vector<std::vector<std::int64_t>> r(static_cast<std::size_t>(a.dim()),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(a.order())));
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.order(); ++j) r[i][j] = rate(a, i, j);
    }
    return r;
}

Profile profile(const MultiMatrix& a) {
    Profile p{rate_table(a)};
    for (auto& row : p.rates) std::sort(row.begin(), row.end());
    std::sort(p.rates.begin(), p.rates.end());
    return p;
}

std::uint64_t group_order(int d, int n) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto mul = [](std::uint64_t x, std::uint64_t y) {
        return (y != 0 && x > kMax / y) ? kMax : x * y;
    };
    std::uint64_t nfact = 1;
    for (int k = 2; k <= n; ++k) nfact = mul(nfact, static_cast<std::uint64_t>(k));
    std::uint64_t out = 1;
    for (int k = 2; k <= d; ++k) out = mul(out, static_cast<std::uint64_t>(k));
    for (int i = 0; i < d; ++i) out = mul(out, nfact);
    return out;
}

bool is_equivalent(const MultiMatrix& a, const MultiMatrix& b, std::uint64_t budget) {
    require_same_shape(a, b);
    if (a.support_size() != b.support_size()) return false;
    if (profile(a) != profile(b)) return false;
    if (a == b) return true;

    const int d = a.dim();
    const int n = a.order();
    const auto ra = rate_table(a);
    const auto rb = rate_table(b);
    const auto perms = all_permutations(n);

    // consistent[i][t]: coordinate permutations of source direction i that
    // carry its rates onto those of target direction t.
    std::vector<std::vector<std::vector<const std::vector<int>*>>> consistent(
        static_cast<std::size_t>(d), std::vector<std::vector<const std::vector<int>*>>(
                                         static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int t = 0; t < d; ++t) {
            for (const auto& p : perms) {
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) ok = rb[t][p[v]] == ra[i][v];
                if (ok) consistent[i][t].push_back(&p);
            }
        }
    }

    std::uint64_t spent = 0;
    std::vector<int> sigma(static_cast<std::size_t>(d), -1);
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::vector<const std::vector<int>*> pis(static_cast<std::size_t>(d), nullptr);
    const auto src = a.bits();
    const auto dst = b.bits();

    auto matches = [&]() {
        const auto contrib = inverse_contrib(a, sigma, pis);
        bool equal = true;
        spent += walk(d, n, a.size(), contrib, [&](std::size_t target, std::size_t source) {
            equal = dst[target] == src[source];
            return equal;
        });
        if (spent > budget) throw BudgetExceeded("equivalence search exceeded its step budget");
        return equal;
    };

    auto search = [&](auto&& self, int i) -> bool {
        if (i == d) return matches();
        for (int t = 0; t < d; ++t) {
            if (used[t]) continue;
            const auto& options = consistent[i][t];
            if (options.empty()) continue;
            used[t] = true;
            sigma[i] = t;
            for (const auto* p : options) {
                pis[i] = p;
                if (++spent > budget) throw BudgetExceeded("equivalence search exceeded its step budget");
                if (self(self, i + 1)) return true;
            }
            used[t] = false;
        }
        return false;
    };
    return search(search, 0);
}

MultiMatrix canonical_form(const MultiMatrix& a, std::uint64_t budget) {
    const int d = a.dim();
    const int n = a.order();
    const std::uint64_t transforms = group_order(d, n);
    const std::uint64_t size = a.size();
    if (transforms > budget / std::max<std::uint64_t>(size, 1)) {
        throw BudgetExceeded("canonical form needs " + std::to_string(transforms) +
                             " transforms of " + std::to_string(size) + " entries, over budget");
    }
    const auto perms = all_permutations(n);
    const auto src = a.bits();
    std::vector<std::uint8_t> best(src.begin(), src.end());

    std::vector<int> sigma(static_cast<std::size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::size_t> choice(static_cast<std::size_t>(d), 0);
    std::vector<const std::vector<int>*> pis(static_cast<std::size_t>(d));
    std::vector<std::uint8_t> candidate(src.size());

    do {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            for (int i = 0; i < d; ++i) pis[i] = &perms[choice[i]];
            const auto contrib = inverse_contrib(a, sigma, pis);
            // Build the image until it is known to be larger than the best.
            int verdict = 0;
            walk(d, n, a.size(), contrib, [&](std::size_t target, std::size_t source) {
                candidate[target] = src[source];
                if (verdict == 0 && candidate[target] != best[target]) {
                    verdict = candidate[target] < best[target] ? -1 : 1;
                }
                return verdict <= 0;
            });
            if (verdict < 0) best = candidate;

            int i = d - 1;
            while (i >= 0 && ++choice[i] == perms.size()) choice[i--] = 0;
            if (i < 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return MultiMatrix(d, n, std::move(best));
}

}  // namespace mdt
