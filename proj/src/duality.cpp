#include "mdt/duality.hpp"

#include "mdt/errors.hpp"

#include <string>

namespace mdt {

Rat Polyplex::hyperplane_sum(int direction, int coordinate) const {
    Rat sum(0);
    for (const auto& [alpha, w] : entries) {
        if (alpha[static_cast<std::size_t>(direction)] == coordinate) sum += w;
    }
    return sum;
}

namespace {

void require_shape(const MultiMatrix& a, const WeightTable& t) {
    if (a.dim() != t.dim() || a.order() != t.order()) {
        throw ShapeError("weight table shape does not match the matrix");
    }
}

void require_shape(const MultiMatrix& a, const Polyplex& k) {
    for (const auto& [alpha, w] : k.entries) {
        if (alpha.size() != static_cast<std::size_t>(a.dim())) {
            throw ShapeError("polyplex index does not match matrix dimension");
        }
        for (int c : alpha) {
            if (c < 0 || c >= a.order()) throw ShapeError("polyplex index outside the matrix");
        }
    }
}

lp::Solution solve_checked(const lp::LinearProgram& program, lp::SolveOptions options = {}) {
    lp::Solution sol = lp::solve(program, options);
    if (sol.status != lp::Status::optimal) {
        throw StateError(std::string("matrix program unexpectedly ") +
                         std::string(lp::to_string(sol.status)));
    }
    return sol;
}

Polyplex unit_polyplex(const MultiMatrix& a, const std::vector<std::size_t>& offsets) {
    Polyplex k;
    for (auto off : offsets) k.entries.emplace(a.index_of(off), Rat(1));
    k.weight = Rat(static_cast<long>(offsets.size()));
    return k;
}

}  // namespace

lp::LinearProgram polyplex_program(const MultiMatrix& a, std::vector<std::size_t>& support_offsets) {
    const int d = a.dim();
    const int n = a.order();
    support_offsets.clear();
    for (std::size_t off = 0; off < a.size(); ++off) {
        if (a.at(off)) support_offsets.push_back(off);
    }
    lp::LinearProgram program;
    program.sense = lp::Sense::maximize;
    program.objective.assign(support_offsets.size(), Rat(1));
    program.constraints.resize(static_cast<std::size_t>(d) * n);
    for (auto& row : program.constraints) {
        row.coeffs.assign(support_offsets.size(), Rat(0));
        row.relation = lp::Relation::less_equal;
        row.rhs = Rat(1);
    }
    for (std::size_t v = 0; v < support_offsets.size(); ++v) {
        const Index alpha = a.index_of(support_offsets[v]);
        for (int i = 0; i < d; ++i) {
            program.constraints[static_cast<std::size_t>(i) * n + alpha[i]].coeffs[v] = Rat(1);
        }
    }
    return program;
}

lp::LinearProgram cover_program(const MultiMatrix& a) {
    const int d = a.dim();
    const int n = a.order();
    const std::size_t vars = static_cast<std::size_t>(d) * n;
    lp::LinearProgram program;
    program.sense = lp::Sense::minimize;
    program.objective.assign(vars, Rat(1));
    for (std::size_t off = 0; off < a.size(); ++off) {
        if (!a.at(off)) continue;
        const Index alpha = a.index_of(off);
        lp::Constraint row{std::vector<Rat>(vars, Rat(0)), lp::Relation::greater_equal, Rat(1)};
        for (int i = 0; i < d; ++i) row.coeffs[static_cast<std::size_t>(i) * n + alpha[i]] = Rat(1);
        program.constraints.push_back(std::move(row));
    }
    return program;
}

std::pair<Rat, Polyplex> optimal_polyplex(const MultiMatrix& a) {
    std::vector<std::size_t> offsets;
    if (a.support_size() == 0) return {Rat(0), Polyplex{{}, Rat(0)}};
    const auto program = polyplex_program(a, offsets);
    const auto sol = solve_checked(program);
    Polyplex k;
    for (std::size_t v = 0; v < offsets.size(); ++v) {
        if (sol.primal[v].sign() > 0) k.entries.emplace(a.index_of(offsets[v]), sol.primal[v]);
    }
    k.weight = sol.objective_value;
    return {sol.objective_value, std::move(k)};
}

std::pair<Rat, WeightTable> optimal_cover(const MultiMatrix& a, lp::SolveOptions options) {
    const auto sol = solve_checked(cover_program(a), options);
    return {sol.objective_value, WeightTable(a.dim(), a.order(), sol.primal)};
}

bool is_cover(const MultiMatrix& a, const WeightTable& table) {
    require_shape(a, table);
    if (!table.nonnegative()) return false;
    const auto covered = coverage_bits(table);
    const auto bits = a.bits();
    for (std::size_t off = 0; off < bits.size(); ++off) {
        if (bits[off] && !covered[off]) return false;
    }
    return true;
}

bool validate_polyplex(const MultiMatrix& a, const Polyplex& k) {
    require_shape(a, k);
    const int d = a.dim();
    const int n = a.order();
    std::vector<Rat> sums(static_cast<std::size_t>(d) * n);
    Rat total(0);
    for (const auto& [alpha, w] : k.entries) {
        if (w.sign() < 0) return false;
        if (!a.at(alpha)) return false;
        total += w;
        for (int i = 0; i < d; ++i) sums[static_cast<std::size_t>(i) * n + alpha[i]] += w;
    }
    for (const auto& s : sums) {
        if (s > Rat(1)) return false;
    }
    return total == k.weight;
}

bool check_complementary_slackness(const MultiMatrix& a, const Polyplex& k,
                                   const WeightTable& table) {
    require_shape(a, table);
    require_shape(a, k);
    for (const auto& [alpha, w] : k.entries) {
        if (w.sign() > 0 && table.coverage(alpha) != Rat(1)) return false;
    }
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            if (table.at(i, j).sign() > 0 && k.hyperplane_sum(i, j) != Rat(1)) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> find_diagonal(const MultiMatrix& a,
                                                      std::optional<std::size_t> through,
                                                      std::size_t step_cap) {
    const int d = a.dim();
    const int n = a.order();
    // Candidates grouped by first coordinate; slot k of the diagonal takes
    // an entry with alpha_0 == k.
    std::vector<std::vector<std::size_t>> by_first(static_cast<std::size_t>(n));
    int forced_slot = -1;
    if (through) {
        forced_slot = a.index_of(*through)[0];
        by_first[forced_slot].push_back(*through);
    }
    for (std::size_t off = 0; off < a.size(); ++off) {
        if (!a.at(off)) continue;
        const int first = static_cast<int>(off / a.stride(0));
        if (first == forced_slot) continue;
        by_first[first].push_back(off);
    }
    for (const auto& group : by_first) {
        if (group.empty()) return std::nullopt;
    }

    std::vector<std::vector<bool>> used(static_cast<std::size_t>(d),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::size_t> chosen;
    std::size_t steps = 0;
    bool aborted = false;
    auto place = [&](auto&& self, int slot) -> bool {
        if (slot == n) return true;
        for (std::size_t off : by_first[slot]) {
            if (++steps > step_cap) {
                aborted = true;
                return false;
            }
            const Index alpha = a.index_of(off);
            bool free = true;
            for (int i = 1; i < d && free; ++i) free = !used[i][alpha[i]];
            if (!free) continue;
            for (int i = 1; i < d; ++i) used[i][alpha[i]] = true;
            chosen.push_back(off);
            if (self(self, slot + 1)) return true;
            chosen.pop_back();
            for (int i = 1; i < d; ++i) used[i][alpha[i]] = false;
            if (aborted) return false;
        }
        return false;
    };
    if (place(place, 0)) return chosen;
    return std::nullopt;
}

ExtremalityReport is_extremal(const MultiMatrix& a) {
    ExtremalityReport report;
    const Rat order(a.order());

    // A diagonal is a polydiagonal of weight n, the maximum possible.
    if (auto diag = find_diagonal(a)) {
        report.optimal_weight = order;
        report.optimal_polyplex = unit_polyplex(a, *diag);
    } else {
        auto [w, k] = optimal_polyplex(a);
        ++report.lp_solves;
        report.optimal_weight = w;
        report.optimal_polyplex = std::move(k);
    }
    report.deficiency = order - report.optimal_weight;
    if (report.optimal_weight == order) {
        report.has_polydiagonal = true;
        return report;
    }

    for (std::size_t off = 0; off < a.size(); ++off) {
        if (a.at(off)) continue;
        if (find_diagonal(a, off)) continue;
        auto [w, k] = optimal_polyplex(a.with_entry(off));
        ++report.lp_solves;
        if (w != order) {
            report.blocking_entry = a.index_of(off);
            report.blocking_weight = w;
            return report;
        }
    }
    report.is_extremal = true;
    return report;
}

CoverUniqueness cover_polytope_is_unique(const MultiMatrix& a) {
    CoverUniqueness out;
    out.ranges = lp::variable_ranges_at_optimum(cover_program(a));
    for (const auto& [lo, hi] : out.ranges) {
        if (lo != hi) out.unique = false;
    }
    return out;
}

}  // namespace mdt
