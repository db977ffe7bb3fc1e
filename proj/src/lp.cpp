#include "mdt/lp.hpp"

#include "mdt/errors.hpp"

#include <algorithm>
#include <string>

namespace mdt::lp {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
    }
    return "unknown";
}

void LinearProgram::validate() const {
    if (objective.empty()) throw ShapeError("linear program has no variables");
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        if (constraints[r].coeffs.size() != objective.size()) {
            throw ShapeError("constraint row " + std::to_string(r) + " has " +
                             std::to_string(constraints[r].coeffs.size()) + " coefficients, expected " +
                             std::to_string(objective.size()));
        }
    }
    if (!lower_bounds.empty() && lower_bounds.size() != objective.size()) {
        throw ShapeError("lower bound vector does not match the number of variables");
    }
}

Rat LinearProgram::lower_bound(std::size_t var) const {
    return lower_bounds.empty() ? Rat(0) : lower_bounds[var];
}

namespace {

// Standard-form program solved by the tableau engine:
//   maximize c.x  subject to  rows (a_i, rel_i, b_i),  x >= 0.
struct Program {
    std::vector<std::vector<Rat>> rows;
    std::vector<Relation> relations;
    std::vector<Rat> rhs;
    std::vector<Rat> cost;
};

struct Outcome {
    Status status = Status::infeasible;
    Rat value;
    std::vector<Rat> x;
    std::vector<Rat> y;  // maximization convention, one per row
};

class Tableau {
public:
    explicit Tableau(const Program& p) : m_(p.rows.size()), n_(p.cost.size()) {
        sign_.assign(m_, 1);
        // Row normalization: rhs >= 0, and >= rows with zero rhs become <=
        // rows so they start with a feasible slack.
        std::vector<Relation> rel(p.relations);
        for (std::size_t i = 0; i < m_; ++i) {
            const int s = p.rhs[i].sign();
            if (s < 0 || (s == 0 && rel[i] == Relation::greater_equal)) {
                sign_[i] = -1;
                if (rel[i] == Relation::less_equal) rel[i] = Relation::greater_equal;
                else if (rel[i] == Relation::greater_equal) rel[i] = Relation::less_equal;
            }
        }
        // Column layout: originals, one slack/surplus per inequality row,
        // one artificial per >= or = row.
        slack_col_.assign(m_, npos);
        art_col_.assign(m_, npos);
        std::size_t col = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (rel[i] != Relation::equal) slack_col_[i] = col++;
        }
        first_art_ = col;
        for (std::size_t i = 0; i < m_; ++i) {
            if (rel[i] != Relation::less_equal) art_col_[i] = col++;
        }
        cols_ = col;
        width_ = cols_ + 1;
        t_.assign(m_ * width_, Rat(0));
        basis_.assign(m_, npos);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (!p.rows[i][j].is_zero()) at(i, j) = sign_[i] > 0 ? p.rows[i][j] : -p.rows[i][j];
            }
            at(i, cols_) = sign_[i] > 0 ? p.rhs[i] : -p.rhs[i];
            if (slack_col_[i] != npos) {
                at(i, slack_col_[i]) = rel[i] == Relation::less_equal ? Rat(1) : Rat(-1);
            }
            if (art_col_[i] != npos) {
                at(i, art_col_[i]) = Rat(1);
                basis_[i] = art_col_[i];
            } else {
                basis_[i] = slack_col_[i];
            }
        }
        rc_.assign(width_, Rat(0));
    }

    Outcome run(const std::vector<Rat>& cost, std::size_t& pivots) {
        Outcome out;
        if (first_art_ < cols_) {
            // Phase 1: maximize -sum(artificials).
            std::vector<Rat> phase1(cols_, Rat(0));
            for (std::size_t j = first_art_; j < cols_; ++j) phase1[j] = Rat(-1);
            price(phase1);
            if (iterate(cols_, pivots) != Status::optimal) {
                throw StateError("phase 1 reported an unbounded auxiliary program");
            }
            if (rc_[cols_].sign() < 0) {
                out.status = Status::infeasible;
                return out;
            }
            evict_artificials(pivots);
        }
        std::vector<Rat> phase2(cols_, Rat(0));
        std::copy(cost.begin(), cost.end(), phase2.begin());
        price(phase2);
        if (iterate(first_art_, pivots) == Status::unbounded) {
            out.status = Status::unbounded;
            return out;
        }
        out.status = Status::optimal;
        out.value = rc_[cols_];
        out.x.assign(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) out.x[basis_[i]] = at(i, cols_);
        }
        out.y.assign(m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            // Reduced cost of the column that started as +e_i equals y_i.
            Rat yi;
            if (art_col_[i] != npos) yi = rc_[art_col_[i]];
            else yi = rc_[slack_col_[i]];
            out.y[i] = sign_[i] > 0 ? yi : -yi;
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Rat& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

    // rc_j = c_B B^-1 A_j - c_j; rc_[cols_] holds the objective value.
    void price(const std::vector<Rat>& cost) {
        for (std::size_t j = 0; j < width_; ++j) rc_[j] = j < cols_ ? -cost[j] : Rat(0);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat& cb = cost[basis_[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < width_; ++j) {
                const Rat& a = at(i, j);
                if (!a.is_zero()) rc_[j] += cb * a;
            }
        }
    }

    // Bland's rule: lowest-index improving column, ties in the ratio test
    // broken by lowest basic variable index. Columns >= limit never enter.
    Status iterate(std::size_t limit, std::size_t& pivots) {
        while (true) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < limit; ++j) {
                if (rc_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return Status::optimal;
            std::size_t leave = npos;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rat& a = at(i, enter);
                if (a.sign() <= 0) continue;
                Rat ratio = at(i, cols_) / a;
                if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == npos) return Status::unbounded;
            pivot(leave, enter);
            ++pivots;
        }
    }

    void evict_artificials(std::size_t& pivots) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_art_) continue;
            for (std::size_t j = 0; j < first_art_; ++j) {
                if (!at(i, j).is_zero()) {
                    pivot(i, j);
                    ++pivots;
                    break;
                }
            }
            // A row with no nonzero outside the artificials is redundant;
            // its artificial stays basic at zero.
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat inv = Rat(1) / at(row, col);
        nz_.clear();
        for (std::size_t j = 0; j < width_; ++j) {
            Rat& a = at(row, j);
            if (a.is_zero()) continue;
            a *= inv;
            nz_.push_back(j);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            const Rat f = at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j : nz_) at(i, j) -= f * at(row, j);
        }
        const Rat f = rc_[col];
        if (!f.is_zero()) {
            for (std::size_t j : nz_) rc_[j] -= f * at(row, j);
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t cols_ = 0;
    std::size_t width_ = 0;
    std::size_t first_art_ = 0;
    std::vector<int> sign_;
    std::vector<std::size_t> slack_col_;
    std::vector<std::size_t> art_col_;
    std::vector<std::size_t> basis_;
    std::vector<Rat> t_;
    std::vector<Rat> rc_;
    std::vector<std::size_t> nz_;
};

Outcome solve_direct(const Program& p, std::size_t& pivots) {
    Tableau t(p);
    return t.run(p.cost, pivots);
}

// Solves p through  min b.y  s.t.  A^T y >= c  with y sign-restricted by
// the row relations. Returns nullopt-like status when the dual is
// infeasible (the primal is then infeasible or unbounded; caller decides).
bool solve_via_dual(const Program& p, std::size_t& pivots, Outcome& out) {
    const std::size_t m = p.rows.size();
    const std::size_t n = p.cost.size();
    // Dual variable groups: y_i = sum_k s_k u_k with u >= 0.
    struct Part {
        std::size_t row;
        int sign;
    };
    std::vector<Part> parts;
    for (std::size_t i = 0; i < m; ++i) {
        switch (p.relations[i]) {
            case Relation::less_equal: parts.push_back({i, 1}); break;
            case Relation::greater_equal: parts.push_back({i, -1}); break;
            case Relation::equal:
                parts.push_back({i, 1});
                parts.push_back({i, -1});
                break;
        }
    }
    Program d;
    d.cost.reserve(parts.size());
    for (const auto& part : parts) {
        d.cost.push_back(part.sign > 0 ? -p.rhs[part.row] : p.rhs[part.row]);
    }
    d.rows.assign(n, std::vector<Rat>(parts.size(), Rat(0)));
    d.relations.assign(n, Relation::greater_equal);
    d.rhs = p.cost;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Rat& a = p.rows[parts[k].row][j];
            if (!a.is_zero()) d.rows[j][k] = parts[k].sign > 0 ? a : -a;
        }
    }
    Outcome dual = solve_direct(d, pivots);
    if (dual.status == Status::infeasible) return false;
    if (dual.status == Status::unbounded) {
        out.status = Status::infeasible;
        return true;
    }
    out.status = Status::optimal;
    out.value = -dual.value;
    out.x.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) out.x[j] = -dual.y[j];
    out.y.assign(m, Rat(0));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].sign > 0) out.y[parts[k].row] += dual.x[k];
        else out.y[parts[k].row] -= dual.x[k];
    }
    return true;
}

}  // namespace

Solution solve(const LinearProgram& lp, SolveOptions options, SolveStats* stats) {
    lp.validate();
    const std::size_t n = lp.num_vars();
    const bool minimize = lp.sense == Sense::minimize;

    Program p;
    p.cost.resize(n);
    Rat shift_value(0);
    for (std::size_t j = 0; j < n; ++j) {
        p.cost[j] = minimize ? -lp.objective[j] : lp.objective[j];
        shift_value += p.cost[j] * lp.lower_bound(j);
    }
    for (const auto& c : lp.constraints) {
        Rat rhs = c.rhs;
        if (!lp.lower_bounds.empty()) {
            for (std::size_t j = 0; j < n; ++j) rhs -= c.coeffs[j] * lp.lower_bounds[j];
        }
        p.rows.push_back(c.coeffs);
        p.relations.push_back(c.relation);
        p.rhs.push_back(std::move(rhs));
    }

    std::size_t pivots = 0;
    Outcome out;
    bool dualized = false;
    const bool try_dual = options.route == Route::dual ||
                          (options.route == Route::automatic && p.rows.size() > n);
    if (try_dual) dualized = solve_via_dual(p, pivots, out);
    if (!dualized) out = solve_direct(p, pivots);
    if (stats) {
        stats->pivots = pivots;
        stats->dualized = dualized;
    }

    Solution sol;
    sol.status = out.status;
    if (out.status != Status::optimal) return sol;
    sol.primal.resize(n);
    for (std::size_t j = 0; j < n; ++j) sol.primal[j] = out.x[j] + lp.lower_bound(j);
    Rat value = out.value + shift_value;
    sol.objective_value = minimize ? -value : value;
    sol.dual = std::move(out.y);
    if (minimize) {
        for (auto& y : sol.dual) y = -y;
    }
    return sol;
}

bool verify_solution(const LinearProgram& lp, const Solution& sol) {
    lp.validate();
    if (sol.status != Status::optimal) return false;
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints.size();
    if (sol.primal.size() != n || sol.dual.size() != m) {
        throw ShapeError("solution does not match the program's shape");
    }
    const bool maximize = lp.sense == Sense::maximize;

    for (std::size_t j = 0; j < n; ++j) {
        if (sol.primal[j] < lp.lower_bound(j)) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        Rat lhs(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (!c.coeffs[j].is_zero()) lhs += c.coeffs[j] * sol.primal[j];
        }
        if (c.relation == Relation::less_equal && lhs > c.rhs) return false;
        if (c.relation == Relation::greater_equal && lhs < c.rhs) return false;
        if (c.relation == Relation::equal && lhs != c.rhs) return false;

        const int s = sol.dual[i].sign();
        // Positive multipliers belong on rows that bound the objective
        // direction: <= for max, >= for min.
        const Relation positive = maximize ? Relation::less_equal : Relation::greater_equal;
        if (c.relation == positive && s < 0) return false;
        if (c.relation != positive && c.relation != Relation::equal && s > 0) return false;
    }

    Rat primal_value(0);
    Rat dual_value(0);
    for (std::size_t i = 0; i < m; ++i) dual_value += lp.constraints[i].rhs * sol.dual[i];
    for (std::size_t j = 0; j < n; ++j) {
        primal_value += lp.objective[j] * sol.primal[j];
        Rat reduced = lp.objective[j];
        for (std::size_t i = 0; i < m; ++i) {
            const Rat& a = lp.constraints[i].coeffs[j];
            if (!a.is_zero()) reduced -= a * sol.dual[i];
        }
        if (maximize ? reduced.sign() > 0 : reduced.sign() < 0) return false;
        dual_value += reduced * lp.lower_bound(j);
    }
    return primal_value == sol.objective_value && dual_value == sol.objective_value;
}

namespace {

LinearProgram optimal_face(const LinearProgram& lp, const Solution& base) {
    LinearProgram face = lp;
    // Within the feasible set, objective >= opt (max) or <= opt (min)
    // carves out exactly the optimal face.
    face.constraints.push_back(
        {lp.objective, lp.sense == Sense::maximize ? Relation::greater_equal : Relation::less_equal,
         base.objective_value});
    face.objective.assign(lp.num_vars(), Rat(0));
    return face;
}

std::pair<Rat, Rat> probe(LinearProgram& face, std::size_t var) {
    std::fill(face.objective.begin(), face.objective.end(), Rat(0));
    face.objective[var] = Rat(1);
    face.sense = Sense::minimize;
    const Solution lo = solve(face);
    face.sense = Sense::maximize;
    const Solution hi = solve(face);
    if (lo.status != Status::optimal || hi.status != Status::optimal) {
        throw StateError("variable is unbounded over the optimal face");
    }
    return {lo.objective_value, hi.objective_value};
}

Solution solve_base(const LinearProgram& lp) {
    lp.validate();
    Solution base = solve(lp);
    if (base.status != Status::optimal) {
        throw StateError(std::string("base program is ") + std::string(to_string(base.status)));
    }
    return base;
}

}  // namespace

std::pair<Rat, Rat> variable_range_at_optimum(const LinearProgram& lp, std::size_t var) {
    if (var >= lp.num_vars()) throw RangeError("variable index out of range");
    const Solution base = solve_base(lp);
    LinearProgram face = optimal_face(lp, base);
    return probe(face, var);
}

std::vector<std::pair<Rat, Rat>> variable_ranges_at_optimum(const LinearProgram& lp) {
    const Solution base = solve_base(lp);
    LinearProgram face = optimal_face(lp, base);
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(lp.num_vars());
    for (std::size_t v = 0; v < lp.num_vars(); ++v) out.push_back(probe(face, v));
    return out;
}

}  // namespace mdt::lp
