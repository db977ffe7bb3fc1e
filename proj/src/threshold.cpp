#include "mdt/threshold.hpp"

#include "mdt/errors.hpp"
#include "mdt/lp.hpp"

#include <algorithm>
#include <map>

namespace mdt {

std::vector<std::uint8_t> incidence_table(const Index& alpha, int n) {
    std::vector<std::uint8_t> v(alpha.size() * static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0 || alpha[i] >= n) throw RangeError("index coordinate out of range");
        v[i * static_cast<std::size_t>(n) + alpha[i]] = 1;
    }
    return v;
}

MultiMatrix matrix_from_weights(const WeightTable& table) {
    if (!table.nonnegative()) throw DomainError("threshold weights must be nonnegative");
    return MultiMatrix(table.dim(), table.order(), coverage_bits(table));
}

bool hyperplanes_nested(const MultiMatrix& a) {
    const int n = a.order();
    const auto bits = a.bits();
    for (int i = 0; i < a.dim(); ++i) {
        const std::size_t inner = a.stride(i);
        const std::size_t period = inner * static_cast<std::size_t>(n);
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                bool j_in_k = true;
                bool k_in_j = true;
                for (std::size_t base = 0; base < a.size() && (j_in_k || k_in_j); base += period) {
                    const std::uint8_t* sj = bits.data() + base + inner * j;
                    const std::uint8_t* sk = bits.data() + base + inner * k;
                    for (std::size_t t = 0; t < inner; ++t) {
                        if (sj[t] > sk[t]) j_in_k = false;
                        if (sk[t] > sj[t]) k_in_j = false;
                    }
                }
                if (!j_in_k && !k_in_j) return false;
            }
        }
    }
    return true;
}

std::optional<ThresholdCertificate> is_threshold(const MultiMatrix& a) {
    if (!hyperplanes_nested(a)) return std::nullopt;
    const int d = a.dim();
    const int n = a.order();
    const std::size_t table_vars = static_cast<std::size_t>(d) * n;
    const std::size_t margin_var = table_vars;

    lp::LinearProgram program;
    program.sense = lp::Sense::maximize;
    program.objective.assign(table_vars + 1, Rat(0));
    program.objective[margin_var] = Rat(1);
    program.constraints.reserve(a.size() + 1);
    for (std::size_t off = 0; off < a.size(); ++off) {
        const Index alpha = a.index_of(off);
        lp::Constraint row{std::vector<Rat>(table_vars + 1, Rat(0)), lp::Relation::greater_equal, Rat(1)};
        for (int i = 0; i < d; ++i) row.coeffs[static_cast<std::size_t>(i) * n + alpha[i]] = Rat(1);
        if (!a.at(off)) {
            row.relation = lp::Relation::less_equal;
            row.coeffs[margin_var] = Rat(1);
        }
        program.constraints.push_back(std::move(row));
    }
    lp::Constraint cap{std::vector<Rat>(table_vars + 1, Rat(0)), lp::Relation::less_equal, Rat(1)};
    cap.coeffs[margin_var] = Rat(1);
    program.constraints.push_back(std::move(cap));

    const auto sol = lp::solve(program);
    if (sol.status != lp::Status::optimal) {
        throw StateError("threshold program is not optimal; it is always feasible and bounded");
    }
    if (sol.objective_value.sign() <= 0) return std::nullopt;
    std::vector<Rat> weights(sol.primal.begin(), sol.primal.begin() + static_cast<long>(table_vars));
    return ThresholdCertificate{WeightTable(d, n, std::move(weights)), sol.objective_value};
}

namespace {

std::uint64_t candidate_count(int d, int n, std::uint64_t budget) {
    const MultiMatrix shape(d, n);
    if (shape.size() >= 63 || (std::uint64_t{1} << shape.size()) > budget) {
        throw BudgetExceeded("exhaustive scan over 2^" + std::to_string(shape.size()) +
                             " supports exceeds the budget");
    }
    return std::uint64_t{1} << shape.size();
}

MultiMatrix from_mask(int d, int n, std::size_t size, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(size);
    for (std::size_t k = 0; k < size; ++k) bits[k] = (mask >> k) & 1;
    return MultiMatrix(d, n, std::move(bits));
}

}  // namespace

std::vector<MultiMatrix> all_threshold_matrices(int d, int n, std::uint64_t budget) {
    const std::uint64_t count = candidate_count(d, n, budget);
    const std::size_t size = MultiMatrix(d, n).size();
    std::vector<MultiMatrix> out;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        MultiMatrix a = from_mask(d, n, size, mask);
        if (is_threshold(a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<MultiMatrix> enumerate_threshold(int d, int n, std::uint64_t budget) {
    std::map<Profile, MultiMatrix> classes;
    for (auto& a : all_threshold_matrices(d, n, budget)) {
        auto key = profile(a);
        classes.try_emplace(std::move(key), std::move(a));
    }
    std::vector<MultiMatrix> out;
    out.reserve(classes.size());
    for (const auto& [key, rep] : classes) out.push_back(canonical_form(rep, budget));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mdt
