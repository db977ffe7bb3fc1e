#pragma once

// Two-dimensional theory: stepped (staircase) matrices, their explicit
// threshold weights, and the extremal matrices with an s x t zero block.

#include "mdt/matrix.hpp"
#include "mdt/weights.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mdt {

/// Row and column supports are nested, decreasing with the index.
bool is_stepped(const MultiMatrix& a);

/// Support cells whose right and lower neighbours are 0 (out of range
/// counts as 0). Rows strictly increase, columns strictly decrease.
using OuterIndexList = std::vector<std::pair<int, int>>;
OuterIndexList outer_indices(const MultiMatrix& a);

/// Weights regenerating a stepped matrix: the l-th of k outer indices gives
/// its row (k-l+1)/(k+1) and its column l/(k+1). Throws DomainError on
/// non-stepped input.
WeightTable stepped_weights(const MultiMatrix& a);

/// n x n matrix with zeros exactly on the last s rows x last t columns.
/// Requires s + t = n + 1.
MultiMatrix khe_matrix(int n, int s, int t);
/// khe_matrix(n, s, n+1-s) for s = 1..n.
std::vector<MultiMatrix> khe_family(int n);

/// Sorts rows and columns by decreasing support size; the result is
/// stepped iff the input is equivalent to some stepped matrix.
std::optional<MultiMatrix> stepped_representative(const MultiMatrix& a);

struct PlanarCensus {
    int n = 0;
    /// Canonical forms, sorted.
    std::vector<MultiMatrix> extremal_classes;
    std::vector<MultiMatrix> threshold_classes;
    std::size_t threshold_count = 0;
    std::size_t stepped_count = 0;
};

/// Exhaustive scan over all 2^(n^2) matrices of order n.
PlanarCensus enumerate_2d(int n, std::uint64_t budget = kDefaultBudget);

}  // namespace mdt
