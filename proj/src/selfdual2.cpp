#include "mdt/selfdual2.hpp"

#include "mdt/errors.hpp"
#include "mdt/kernels.hpp"
#include "mdt/threshold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mdt {

namespace {

void require_order2(const MultiMatrix& a) {
    if (a.order() != 2) throw OrderError("operation is defined for order-2 matrices only");
}

std::string show(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace

void EssentialWeights::validate() const {
    if (weights.empty()) throw DomainError("essential weights need at least one direction");
    for (const auto& w : weights) {
        if (w.sign() <= 0) throw DomainError("essential weights must be positive, got " + w.str());
    }
}

Rat EssentialWeights::total() const {
    Rat sum(0);
    for (const auto& w : weights) sum += w;
    return sum;
}

EssentialWeights CounterexampleRecord::first_vertex() const {
    EssentialWeights w;
    for (long v : numerators) w.weights.emplace_back(v, q);
    return w;
}

EssentialWeights CounterexampleRecord::second_vertex() const {
    EssentialWeights w = first_vertex();
    std::swap(w.weights.at(static_cast<std::size_t>(swap_positions.first)),
              w.weights.at(static_cast<std::size_t>(swap_positions.second)));
    return w;
}

bool CounterexampleReport::passed() const { return first_failure() == 0; }

char CounterexampleReport::first_failure() const {
    for (const auto& c : clauses) {
        if (!c.passed) return c.clause;
    }
    return 0;
}

bool is_selfdual(const MultiMatrix& a) {
    require_order2(a);
    return kernels::active().antipodal_defects(a.bits()) == 0;
}

std::optional<EssentialWeights> essential_weights_of(const WeightTable& cover) {
    if (cover.order() != 2) throw OrderError("essential weights are defined for order-2 covers only");
    EssentialWeights w;
    for (int i = 0; i < cover.dim(); ++i) {
        const Rat& lo = cover.at(i, 0);
        const Rat& hi = cover.at(i, 1);
        if (lo.sign() < 0 || hi.sign() < 0) throw DomainError("cover weights must be nonnegative");
        if (lo.sign() > 0 && hi.sign() > 0) return std::nullopt;
        if (lo.sign() > 0) w.weights.push_back(lo);
        else if (hi.sign() > 0) w.weights.push_back(hi);
    }
    return w;
}

WeightTable essential_to_table(const EssentialWeights& w) {
    w.validate();
    const int d = static_cast<int>(w.weights.size());
    WeightTable t(d, 2);
    for (int i = 0; i < d; ++i) t.at(i, 1) = w.weights[static_cast<std::size_t>(i)];
    return t;
}

bool extremal_iff_selfdual_threshold(const MultiMatrix& a) {
    require_order2(a);
    const bool extremal = is_extremal(a).is_extremal;
    const bool selfdual_threshold = is_selfdual(a) && is_threshold(a).has_value();
    return extremal == selfdual_threshold;
}

bool rate_parity_check(const MultiMatrix& a) {
    require_order2(a);
    const auto rates = rate_table(a);
    const auto parity = rates[0][0] % 2;
    for (const auto& row : rates) {
        for (auto r : row) {
            if (r % 2 != parity) return false;
        }
    }
    return true;
}

std::vector<MultiMatrix> enumerate_extremal_order2(int d, std::uint64_t budget, Dedup dedup) {
    if (d < 1) throw ShapeError("dimension must be >= 1");
    const MultiMatrix shape(d, 2);
    const std::size_t size = shape.size();
    const std::size_t pairs = size / 2;
    if (pairs >= 63 || (std::uint64_t{1} << pairs) > budget) {
        throw BudgetExceeded("2^" + std::to_string(pairs) + " selfdual candidates exceed the budget");
    }
    const std::uint64_t count = std::uint64_t{1} << pairs;
    std::map<Profile, MultiMatrix> by_profile;
    std::set<MultiMatrix> by_form;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::uint8_t> bits(size, 0);
        for (std::size_t k = 0; k < pairs; ++k) {
            // Bit k picks which member of the antipodal pair (k, size-1-k)
            // is in the support.
            if ((mask >> k) & 1) bits[size - 1 - k] = 1;
            else bits[k] = 1;
        }
        MultiMatrix a(d, 2, std::move(bits));
        if (!is_threshold(a)) continue;
        if (dedup == Dedup::profile) {
            auto key = profile(a);
            by_profile.try_emplace(std::move(key), std::move(a));
        } else {
            by_form.insert(canonical_form(a, budget));
        }
    }
    std::vector<MultiMatrix> out;
    if (dedup == Dedup::profile) {
        for (const auto& [key, rep] : by_profile) out.push_back(canonical_form(rep, budget));
        std::sort(out.begin(), out.end());
    } else {
        out.assign(by_form.begin(), by_form.end());
    }
    return out;
}

CounterexampleReport check_counterexample(const CounterexampleRecord& rec) {
    CounterexampleReport report;
    report.record = rec;
    auto add = [&](char clause, bool ok, std::string detail) {
        report.clauses.push_back({clause, ok, std::move(detail)});
    };
    if (rec.q <= 0 || rec.numerators.empty()) throw DomainError("malformed counterexample record");
    const int d = static_cast<int>(rec.numerators.size());
    const auto [s0, s1] = rec.swap_positions;
    if (s0 < 0 || s1 < 0 || s0 >= d || s1 >= d || s0 == s1) {
        throw DomainError("swap positions out of range");
    }

    const Rat q(rec.q);
    const Rat delta = Rat(1) / q;
    const Rat target = Rat(2) - delta;

    long sum = 0;
    for (long v : rec.numerators) sum += v;
    add('a', sum == 2 * rec.q - 1,
        "numerator sum " + std::to_string(sum) + ", expected 2q-1 = " + std::to_string(2 * rec.q - 1));

    const EssentialWeights v1 = rec.first_vertex();
    const EssentialWeights v2 = rec.second_vertex();
    const WeightTable t1 = essential_to_table(v1);
    const WeightTable t2 = essential_to_table(v2);
    const MultiMatrix a = matrix_from_weights(t1);
    const MultiMatrix a2 = matrix_from_weights(t2);
    report.support_size = a.support_size();
    add('b', a == a2, a == a2 ? "both vertices generate the same matrix" : "vertices generate different matrices");

    const auto ext = is_extremal(a);
    report.deficiency = ext.deficiency;
    add('c', ext.is_extremal && ext.deficiency == delta,
        std::string(ext.is_extremal ? "extremal" : "not extremal") + ", deficiency " +
            ext.deficiency.str() + ", expected " + delta.str());

    const auto [cover_weight, cover] = optimal_cover(a);
    report.optimal_weight = cover_weight;
    const bool d_ok = is_cover(a, t1) && is_cover(a, t2) && t1.total() == cover_weight &&
                      t2.total() == cover_weight && cover_weight == target;
    add('d', d_ok,
        "optimal cover weight " + cover_weight.str() + ", vertex weights " + t1.total().str() + " and " +
            t2.total().str() + ", expected " + target.str());

    const auto uniq = cover_polytope_is_unique(a);
    report.ranges = uniq.ranges;
    std::set<std::size_t> moving;
    for (std::size_t v = 0; v < uniq.ranges.size(); ++v) {
        if (uniq.ranges[v].first != uniq.ranges[v].second) moving.insert(v);
    }
    const std::set<std::size_t> expected_moving{static_cast<std::size_t>(s0) * 2 + 1,
                                                static_cast<std::size_t>(s1) * 2 + 1};
    bool e_ok = !uniq.unique && moving == expected_moving;
    if (e_ok) {
        const Rat& lo = std::min(v1.weights[s0], v1.weights[s1]);
        const Rat& hi = std::max(v1.weights[s0], v1.weights[s1]);
        for (auto v : expected_moving) {
            e_ok = e_ok && uniq.ranges[v].first == lo && uniq.ranges[v].second == hi;
        }
    }
    add('e', e_ok,
        std::to_string(moving.size()) + " weights vary over the optimal face" +
            (uniq.unique ? " (cover unique)" : ""));

    std::vector<Rat> mid;
    for (std::size_t i = 0; i < v1.weights.size(); ++i) {
        mid.push_back((v1.weights[i] + v2.weights[i]) / Rat(2));
    }
    const WeightTable tm = essential_to_table(EssentialWeights{mid});
    bool off_grid = false;
    for (const auto& w : mid) off_grid = off_grid || !is_integer_multiple(w, delta);
    add('f', is_cover(a, tm) && tm.total() == cover_weight && off_grid,
        "midpoint " + show(mid) + (off_grid ? " has an entry off the 1/q grid" : " lies on the 1/q grid"));
    return report;
}

CounterexampleReport verify_counterexample(const CounterexampleRecord& rec) {
    CounterexampleReport report = check_counterexample(rec);
    for (const auto& c : report.clauses) {
        if (!c.passed) {
            throw VerificationError(std::string("counterexample #") + std::to_string(rec.label) +
                                    " fails clause (" + c.clause + "): " + c.detail);
        }
    }
    return report;
}

const std::vector<CounterexampleRecord>& builtin_counterexamples() {
    static const std::vector<CounterexampleRecord> records{
        {1, 25, {13, 7, 6, 6, 4, 4, 4, 3, 2}, {7, 8}},
        {2, 30, {17, 9, 8, 7, 6, 5, 3, 2, 2}, {3, 4}},
        {3, 28, {13, 9, 7, 7, 6, 4, 4, 3, 2}, {7, 8}},
        {4, 27, {14, 9, 7, 6, 5, 5, 3, 2, 2}, {2, 3}},
        {5, 33, {17, 12, 8, 8, 7, 6, 3, 2, 2}, {4, 5}},
        {6, 24, {11, 9, 6, 6, 4, 4, 4, 2, 1}, {7, 8}},
        {7, 28, {13, 11, 7, 7, 5, 5, 4, 2, 1}, {7, 8}},
        {8, 28, {13, 11, 8, 6, 6, 4, 4, 2, 1}, {7, 8}},
        {9, 32, {15, 13, 9, 7, 7, 5, 4, 2, 1}, {7, 8}},
        {10, 33, {13, 11, 10, 8, 6, 6, 5, 4, 2}, {6, 7}},
        {11, 34, {16, 14, 11, 9, 6, 4, 4, 2, 1}, {7, 8}},
        {12, 38, {18, 16, 12, 10, 7, 5, 4, 2, 1}, {7, 8}},
    };
    return records;
}

}  // namespace mdt
