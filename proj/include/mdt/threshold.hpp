#pragma once

#include "mdt/matrix.hpp"
#include "mdt/rational.hpp"
#include "mdt/weights.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mdt {

/// Separating weight table: support indices covered >= 1, all other
/// indices covered <= 1 - margin, margin > 0.
struct ThresholdCertificate {
    WeightTable table;
    Rat margin;
};

/// d x n 0/1 table with a single 1 per direction row, at column alpha_i.
std::vector<std::uint8_t> incidence_table(const Index& alpha, int n);

/// A(table): entry alpha is 1 iff its incident weights sum to >= 1.
MultiMatrix matrix_from_weights(const WeightTable& table);

/// Necessary condition for thresholdness: in every direction the parallel
/// hyperplanes are totally ordered by support inclusion.
bool hyperplanes_nested(const MultiMatrix& a);

/// Decides thresholdness by maximizing the separation margin over
/// nonnegative tables (margin capped at 1).
std::optional<ThresholdCertificate> is_threshold(const MultiMatrix& a);

/// All threshold matrices of shape (d, n), one canonical representative
/// per profile class, sorted. `budget` bounds the 2^(n^d) candidate scan
/// and the canonicalization of each representative.
std::vector<MultiMatrix> enumerate_threshold(int d, int n, std::uint64_t budget = kDefaultBudget);

/// Every threshold matrix of shape (d, n) (not reduced up to equivalence).
std::vector<MultiMatrix> all_threshold_matrices(int d, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace mdt
