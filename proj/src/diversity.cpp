#include "mdt/diversity.hpp"

#include "mdt/errors.hpp"
#include "mdt/threshold.hpp"

#include <numeric>

namespace mdt {

int diversity_of(const EssentialWeights& w) {
    w.validate();
    std::set<Rat> distinct(w.weights.begin(), w.weights.end());
    return static_cast<int>(distinct.size());
}

EssentialWeights div1_cover(int d) {
    if (d < 1 || d % 2 == 0) {
        throw DomainError("diversity-1 extremal covers exist only for odd d, got d = " + std::to_string(d));
    }
    return EssentialWeights{std::vector<Rat>(static_cast<std::size_t>(d), Rat(2, d + 1))};
}

std::vector<Div1Level> scan_diversity1(int d) {
    std::vector<Div1Level> out;
    for (int k = 1; k <= d; ++k) {
        const MultiMatrix a =
            matrix_from_weights(essential_to_table(EssentialWeights{std::vector<Rat>(d, Rat(1, k))}));
        Div1Level level;
        level.k = k;
        const auto ext = is_extremal(a);
        level.extremal = ext.is_extremal;
        level.deficiency = ext.deficiency;
        const auto [weight, cover] = optimal_cover(a);
        const WeightTable uniform =
            essential_to_table(EssentialWeights{std::vector<Rat>(d, weight / Rat(d))});
        level.uniform_optimal = weight.sign() > 0 && is_cover(a, uniform);
        out.push_back(level);
    }
    return out;
}

void Div2Params::validate() const {
    if (!(s >= 1 && p > s && q > p)) throw DomainError("diversity-2 parameters need q > p > s >= 1");
    if (t_x < 1 || t_y < 1) throw DomainError("diversity-2 multiplicities must be positive");
    if (std::gcd(std::gcd(p, s), q) != 1) {
        throw DomainError("diversity-2 parameters must be in lowest terms (gcd(p, s, q) = 1)");
    }
}

EssentialWeights Div2Params::tuple() const {
    validate();
    EssentialWeights w;
    w.weights.assign(static_cast<std::size_t>(t_x), Rat(p, q));
    w.weights.insert(w.weights.end(), static_cast<std::size_t>(t_y), Rat(s, q));
    return w;
}

namespace {

Rat weight_formula(long choose_x_n, long choose_x_k, long choose_y_n, long choose_y_k,
                   long numerator, long iq) {
    const BigInt denom = binomial(choose_x_n, choose_x_k) * binomial(choose_y_n, choose_y_k);
    return Rat(BigInt(numerator), denom * iq);
}

bool witness_consistent(const Div2Params& pr, const Div2Witness& w) {
    return w.i >= 1 && 0 <= w.r_x && w.r_x < w.l_x && w.l_x <= pr.t_x && 0 <= w.l_y &&
           w.l_y < w.r_y && w.r_y <= pr.t_y && w.l_x == w.r_x + w.i * pr.s &&
           w.l_y == w.r_y - w.i * pr.p && (w.r_x < pr.s || w.r_y + pr.p > pr.t_y) &&
           (w.l_x + pr.s > pr.t_x || w.l_y < pr.p) && w.r_x * pr.p + w.r_y * pr.s == pr.q &&
           w.l_x * pr.p + w.l_y * pr.s == pr.q;
}

bool unique_on_grid(const MultiMatrix& a, const Rat& delta) {
    const auto uniq = cover_polytope_is_unique(a);
    if (!uniq.unique) return false;
    for (const auto& [lo, hi] : uniq.ranges) {
        if (!is_integer_multiple(lo, delta)) return false;
    }
    return true;
}

}  // namespace

std::optional<Div2Witness> div2_admissible(const Div2Params& pr) {
    pr.validate();
    if (std::gcd(pr.p, pr.s) != 1) return std::nullopt;
    if (pr.t_x * pr.p + pr.t_y * pr.s != 2 * pr.q - 1) return std::nullopt;

    // Solutions of a*p + b*s = q in the box form one progression in a with
    // step s; take its two ends.
    std::optional<long> lo;
    std::optional<long> hi;
    for (long a = 0; a <= pr.t_x; ++a) {
        const long rest = pr.q - a * pr.p;
        if (rest < 0 || rest % pr.s != 0 || rest / pr.s > pr.t_y) continue;
        if (!lo) lo = a;
        hi = a;
    }
    if (!lo || *lo == *hi) return std::nullopt;

    Div2Witness w;
    w.r_x = *lo;
    w.r_y = (pr.q - w.r_x * pr.p) / pr.s;
    w.l_x = *hi;
    w.l_y = (pr.q - w.l_x * pr.p) / pr.s;
    w.i = (w.l_x - w.r_x) / pr.s;
    if (!witness_consistent(pr, w)) return std::nullopt;
    w.w_I = weight_formula(pr.t_x, w.r_x, pr.t_y, w.r_y, w.l_x * pr.t_y - w.l_y * pr.t_x, w.i * pr.q);
    w.w_J = weight_formula(pr.t_x, w.l_x, pr.t_y, w.l_y, w.r_y * pr.t_x - w.r_x * pr.t_y, w.i * pr.q);
    return w;
}

Polyplex div2_polyplex(const Div2Params& pr, const Div2Witness& w) {
    pr.validate();
    if (!witness_consistent(pr, w) || w.w_I.sign() < 0 || w.w_J.sign() < 0) {
        throw DomainError("witness does not satisfy the diversity-2 conditions");
    }
    const int d = pr.dim();
    const MultiMatrix shape(d, 2);
    Polyplex k;
    k.weight = Rat(0);
    for (std::size_t off = 0; off < shape.size(); ++off) {
        const Index alpha = shape.index_of(off);
        long ones_x = 0;
        long ones_y = 0;
        for (int i = 0; i < d; ++i) (i < pr.t_x ? ones_x : ones_y) += alpha[i];
        const Rat* weight = nullptr;
        if (ones_x == w.r_x && ones_y == w.r_y) weight = &w.w_I;
        else if (ones_x == w.l_x && ones_y == w.l_y) weight = &w.w_J;
        if (weight == nullptr || weight->is_zero()) continue;
        k.entries.emplace(alpha, *weight);
        k.weight += *weight;
    }
    return k;
}

Div2Oracle div2_oracle(const Div2Params& pr) {
    const EssentialWeights tuple = pr.tuple();
    const MultiMatrix a = matrix_from_weights(essential_to_table(tuple));
    Div2Oracle out;
    const auto ext = is_extremal(a);
    out.extremal = ext.is_extremal;
    out.deficiency = ext.deficiency;
    out.optimal_weight = optimal_cover(a).first;
    out.tuple_optimal = tuple.total() == out.optimal_weight;
    return out;
}

Div2SweepReport div2_cross_validate(long max_q, int max_d) {
    Div2SweepReport report;
    for (long q = 3; q <= max_q; ++q) {
        for (long p = 2; p < q; ++p) {
            for (long s = 1; s < p; ++s) {
                if (std::gcd(std::gcd(p, s), q) != 1) continue;
                for (int d = 2; d <= max_d; ++d) {
                    for (int t_x = 1; t_x < d; ++t_x) {
                        Div2SweepEntry e;
                        e.params = Div2Params{p, s, q, t_x, d - t_x};
                        e.witness = div2_admissible(e.params);
                        e.oracle = div2_oracle(e.params);
                        e.agree = e.witness.has_value() == e.oracle.admissible();
                        if (e.witness) {
                            ++report.admissible;
                            report.observed_i.insert(e.witness->i);
                            const Rat delta(1, q);
                            const MultiMatrix a =
                                matrix_from_weights(essential_to_table(e.params.tuple()));
                            const Polyplex k = div2_polyplex(e.params, *e.witness);
                            e.certified = e.oracle.deficiency == delta &&
                                          k.weight == Rat(2) - delta && validate_polyplex(a, k) &&
                                          check_complementary_slackness(
                                              a, k, essential_to_table(e.params.tuple())) &&
                                          is_selfdual(a) && unique_on_grid(a, delta);
                            if (!e.certified) ++report.certificate_failures;
                        }
                        if (!e.agree) ++report.disagreements;
                        report.entries.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace mdt
