#pragma once

// Polyplexes (fractional partial diagonals) and hyperplane covers form a
// primal/dual pair of linear programs over a (0,1)-matrix.

#include "mdt/lp.hpp"
#include "mdt/matrix.hpp"
#include "mdt/rational.hpp"
#include "mdt/weights.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mdt {

/// Nonnegative weights on support entries; only positive entries are stored.
struct Polyplex {
    std::map<Index, Rat> entries;
    Rat weight;

    /// Sum of the entries lying in hyperplane (direction, coordinate).
    Rat hyperplane_sum(int direction, int coordinate) const;
};

struct ExtremalityReport {
    bool is_extremal = false;
    Rat optimal_weight;
    /// n - optimal_weight, reported for every matrix.
    Rat deficiency;
    Polyplex optimal_polyplex;
    /// Non-extremal because A itself holds a polydiagonal.
    bool has_polydiagonal = false;
    /// Non-extremal because adding this zero entry still leaves no
    /// polydiagonal; its optimal weight is recorded alongside.
    std::optional<Index> blocking_entry;
    Rat blocking_weight;
    std::size_t lp_solves = 0;
};

lp::LinearProgram polyplex_program(const MultiMatrix& a, std::vector<std::size_t>& support_offsets);
/// Variables are lambda[i][j] in row-major order (i * n + j).
lp::LinearProgram cover_program(const MultiMatrix& a);

std::pair<Rat, Polyplex> optimal_polyplex(const MultiMatrix& a);
std::pair<Rat, WeightTable> optimal_cover(const MultiMatrix& a,
                                          lp::SolveOptions options = {});

bool is_cover(const MultiMatrix& a, const WeightTable& table);
bool validate_polyplex(const MultiMatrix& a, const Polyplex& k);
bool check_complementary_slackness(const MultiMatrix& a, const Polyplex& k,
                                   const WeightTable& table);

/// Searches for an integer diagonal (n support entries, pairwise distinct
/// in every coordinate), optionally forced through `through` which is
/// treated as a support entry. Gives up after `step_cap` nodes.
std::optional<std::vector<std::size_t>> find_diagonal(const MultiMatrix& a,
                                                      std::optional<std::size_t> through = {},
                                                      std::size_t step_cap = 1u << 16);

ExtremalityReport is_extremal(const MultiMatrix& a);

struct CoverUniqueness {
    bool unique = true;
    /// [min, max] of lambda[i][j] over all optimal covers, row-major.
    std::vector<std::pair<Rat, Rat>> ranges;
};
CoverUniqueness cover_polytope_is_unique(const MultiMatrix& a);

}  // namespace mdt
