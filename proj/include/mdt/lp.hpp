#pragma once

#include "mdt/rational.hpp"

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace mdt::lp {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };
enum class Status { optimal, infeasible, unbounded };

std::string_view to_string(Status status);

struct Constraint {
    std::vector<Rat> coeffs;
    Relation relation = Relation::less_equal;
    Rat rhs;
};

struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<Rat> objective;
    std::vector<Constraint> constraints;
    /// Per-variable lower bounds; empty means all zero.
    std::vector<Rat> lower_bounds;

    std::size_t num_vars() const { return objective.size(); }
    /// Throws ShapeError when rows are ragged or there are no variables.
    void validate() const;
    Rat lower_bound(std::size_t var) const;
};

/// Dual values follow the Lagrangian sign convention: for a maximization,
/// y >= 0 on <= rows and y <= 0 on >= rows; for a minimization, y >= 0 on
/// >= rows and y <= 0 on <= rows. Equality rows are free.
struct Solution {
    Status status = Status::infeasible;
    Rat objective_value;
    std::vector<Rat> primal;
    std::vector<Rat> dual;
};

/// automatic dualizes programs with more rows than columns; direct and
/// dual force one route (used to cross-check the two).
enum class Route { automatic, direct, dual };

struct SolveOptions {
    Route route = Route::automatic;
};

struct SolveStats {
    std::size_t pivots = 0;
    bool dualized = false;
};

/// Exact two-phase simplex with Bland's rule. Programs with many more rows
/// than columns are solved through their dual.
Solution solve(const LinearProgram& lp, SolveOptions options = {}, SolveStats* stats = nullptr);

/// Checks primal feasibility, dual sign and reduced-cost feasibility, and
/// equality of the primal and dual objectives.
bool verify_solution(const LinearProgram& lp, const Solution& sol);

/// Exact [min, max] of a variable over the optimal face of `lp`.
std::pair<Rat, Rat> variable_range_at_optimum(const LinearProgram& lp, std::size_t var);
/// Ranges of every variable, solving the base program once.
std::vector<std::pair<Rat, Rat>> variable_ranges_at_optimum(const LinearProgram& lp);

}  // namespace mdt::lp
