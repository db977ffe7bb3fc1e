#include "mdt/planar.hpp"

#include "mdt/duality.hpp"
#include "mdt/errors.hpp"
#include "mdt/threshold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mdt {

namespace {

void require_planar(const MultiMatrix& a) {
    if (a.dim() != 2) throw ShapeError("operation is defined for 2-dimensional matrices only");
}

bool cell(const MultiMatrix& a, int i, int j) {
    const int n = a.order();
    if (i >= n || j >= n) return false;
    return a.at(static_cast<std::size_t>(i) * n + j);
}

}  // namespace

bool is_stepped(const MultiMatrix& a) {
    require_planar(a);
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!cell(a, i, j)) continue;
            if (i > 0 && !cell(a, i - 1, j)) return false;
            if (j > 0 && !cell(a, i, j - 1)) return false;
        }
    }
    return true;
}

OuterIndexList outer_indices(const MultiMatrix& a) {
    require_planar(a);
    const int n = a.order();
    OuterIndexList out;
    for (int i = 0; i < n; ++i) {
        for (int j = n - 1; j >= 0; --j) {
            if (cell(a, i, j) && !cell(a, i + 1, j) && !cell(a, i, j + 1)) out.emplace_back(i, j);
        }
    }
    return out;
}

WeightTable stepped_weights(const MultiMatrix& a) {
    require_planar(a);
    if (!is_stepped(a)) throw DomainError("stepped_weights needs a stepped matrix");
    const int n = a.order();
    const OuterIndexList outer = outer_indices(a);
    const long k = static_cast<long>(outer.size());
    WeightTable t(2, n);
    for (long l = 1; l <= k; ++l) {
        const auto [row, col] = outer[static_cast<std::size_t>(l - 1)];
        t.at(0, row) = Rat(k - l + 1, k + 1);
        t.at(1, col) = Rat(l, k + 1);
    }
    // A row without an outer index equals the next row down, which ends at
    // the same column; the last row of each equal run holds the outer index.
    std::vector<int> row_len(static_cast<std::size_t>(n), 0);
    std::vector<int> col_len(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (cell(a, i, j)) {
                ++row_len[static_cast<std::size_t>(i)];
                ++col_len[static_cast<std::size_t>(j)];
            }
        }
    }
    for (int i = n - 2; i >= 0; --i) {
        if (row_len[i] > 0 && row_len[i] == row_len[i + 1]) t.at(0, i) = t.at(0, i + 1);
    }
    for (int j = n - 2; j >= 0; --j) {
        if (col_len[j] > 0 && col_len[j] == col_len[j + 1]) t.at(1, j) = t.at(1, j + 1);
    }
    return t;
}

MultiMatrix khe_matrix(int n, int s, int t) {
    if (n < 1 || s < 1 || t < 1 || s > n || t > n || s + t != n + 1) {
        throw DomainError("khe_matrix needs 1 <= s, t <= n and s + t = n + 1");
    }
    MultiMatrix a = MultiMatrix::full(2, n);
    for (int i = n - s; i < n; ++i) {
        for (int j = n - t; j < n; ++j) a.set(static_cast<std::size_t>(i) * n + j, false);
    }
    return a;
}

std::vector<MultiMatrix> khe_family(int n) {
    std::vector<MultiMatrix> out;
    for (int s = 1; s <= n; ++s) out.push_back(khe_matrix(n, s, n + 1 - s));
    return out;
}

std::optional<MultiMatrix> stepped_representative(const MultiMatrix& a) {
    require_planar(a);
    const int n = a.order();
    const auto rates = rate_table(a);
    Transform tr = Transform::identity(2, n);
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return rates[dir][x] > rates[dir][y]; });
        for (int pos = 0; pos < n; ++pos) tr.coordinate_perms[dir][order[pos]] = pos;
    }
    MultiMatrix b = tr.apply(a);
    if (!is_stepped(b)) return std::nullopt;
    return b;
}

PlanarCensus enumerate_2d(int n, std::uint64_t budget) {
    const MultiMatrix shape(2, n);
    const std::size_t size = shape.size();
    if (size >= 63 || (std::uint64_t{1} << size) > budget) {
        throw BudgetExceeded("exhaustive scan over 2^" + std::to_string(size) +
                             " planar matrices exceeds the budget");
    }
    PlanarCensus census;
    census.n = n;
    std::set<MultiMatrix> extremal;
    std::set<MultiMatrix> threshold;
    const std::uint64_t count = std::uint64_t{1} << size;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::uint8_t> bits(size);
        for (std::size_t k = 0; k < size; ++k) bits[k] = (mask >> k) & 1;
        const MultiMatrix a(2, n, std::move(bits));
        if (is_stepped(a)) ++census.stepped_count;
        if (is_threshold(a)) {
            ++census.threshold_count;
            threshold.insert(canonical_form(a, budget));
        }
        if (is_extremal(a).is_extremal) extremal.insert(canonical_form(a, budget));
    }
    census.extremal_classes.assign(extremal.begin(), extremal.end());
    census.threshold_classes.assign(threshold.begin(), threshold.end());
    return census;
}

}  // namespace mdt
