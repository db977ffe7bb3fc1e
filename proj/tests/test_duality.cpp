#include "mdt/duality.hpp"
#include "mdt/errors.hpp"
#include "mdt/planar.hpp"
#include "mdt/selfdual2.hpp"
#include "mdt/threshold.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using mdt::Index;
using mdt::MultiMatrix;
using mdt::Rat;
using mdt::WeightTable;

namespace {

MultiMatrix identity2d(int n) {
    MultiMatrix a(2, n);
    for (int i = 0; i < n; ++i) a.set(Index{i, i}, true);
    return a;
}

const MultiMatrix kMajority = MultiMatrix::from_string(3, 2, "00010111");
const MultiMatrix kFullRow = MultiMatrix::from_string(2, 2, "1100");

WeightTable majority_cover() {
    WeightTable t(3, 2);
    for (int i = 0; i < 3; ++i) t.at(i, 1) = Rat(1, 2);
    return t;
}

// Every hyperplane sum of k is at most 1 and every entry is in supp(a).
bool naive_polyplex_ok(const MultiMatrix& a, const mdt::Polyplex& k) {
    std::vector<Rat> sums(static_cast<std::size_t>(a.dim()) * a.order(), Rat(0));
    Rat total(0);
    for (const auto& [alpha, w] : k.entries) {
        if (!a.at(oracle::flatten(alpha, a.order())) || w.sign() < 0) return false;
        for (int i = 0; i < a.dim(); ++i) sums[static_cast<std::size_t>(i) * a.order() + alpha[i]] += w;
        total += w;
    }
    for (const auto& s : sums) {
        if (s > Rat(1)) return false;
    }
    return total == k.weight;
}

bool naive_is_cover(const MultiMatrix& a, const WeightTable& t) {
    for (std::size_t off = 0; off < a.size(); ++off) {
        if (a.at(off) && oracle::naive_coverage(t, oracle::unflatten(off, a.dim(), a.order())) < Rat(1)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("optimal polyplex weights") {
    CHECK(mdt::optimal_polyplex(identity2d(3)).first == Rat(3));
    CHECK(mdt::optimal_polyplex(kFullRow).first == Rat(1));
    const auto [w, k] = mdt::optimal_polyplex(kMajority);
    CHECK(w == Rat(3, 2));
    CHECK(naive_polyplex_ok(kMajority, k));
    CHECK(mdt::optimal_polyplex(MultiMatrix(3, 3)).first == Rat(0));
}

TEST_CASE("optimal cover weights") {
    const auto [w0, t0] = mdt::optimal_cover(MultiMatrix(2, 3));
    CHECK(w0 == Rat(0));
    CHECK(t0.total() == Rat(0));
    const auto [w, t] = mdt::optimal_cover(kMajority);
    CHECK(w == Rat(3, 2));
    CHECK(naive_is_cover(kMajority, t));
    const auto ess = mdt::essential_weights_of(t);
    REQUIRE(ess);
    CHECK(ess->weights == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(mdt::optimal_cover(kFullRow).first == Rat(1));
}

TEST_CASE("is_cover") {
    WeightTable row_dir(3, 2);
    row_dir.at(1, 0) = Rat(1);
    row_dir.at(1, 1) = Rat(1);
    CHECK(mdt::is_cover(kMajority, row_dir));
    WeightTable partial(3, 2);
    partial.at(0, 1) = Rat(1, 2);
    partial.at(1, 1) = Rat(1, 2);
    CHECK_FALSE(mdt::is_cover(kMajority, partial));
    CHECK(mdt::is_cover(MultiMatrix(2, 2), WeightTable(2, 2)));
    CHECK_THROWS_AS(mdt::is_cover(kMajority, WeightTable(2, 2)), mdt::ShapeError);
}

TEST_CASE("polyplex validation") {
    const auto id = identity2d(3);
    mdt::Polyplex diag;
    for (int i = 0; i < 3; ++i) diag.entries[Index{i, i}] = Rat(1);
    diag.weight = Rat(3);
    CHECK(mdt::validate_polyplex(id, diag));
    mdt::Polyplex heavy;
    heavy.entries[Index{0, 0}] = Rat(2);
    heavy.weight = Rat(2);
    CHECK_FALSE(mdt::validate_polyplex(id, heavy));
    mdt::Polyplex maj;
    for (Index a : {Index{1, 1, 0}, Index{1, 0, 1}, Index{0, 1, 1}}) maj.entries[a] = Rat(1, 2);
    maj.weight = Rat(3, 2);
    CHECK(mdt::validate_polyplex(kMajority, maj));
    mdt::Polyplex outside;
    outside.entries[Index{0, 1}] = Rat(1, 2);
    outside.weight = Rat(1, 2);
    CHECK_FALSE(mdt::validate_polyplex(id, outside));
    CHECK_THROWS_AS(mdt::validate_polyplex(kMajority, diag), mdt::ShapeError);

    CHECK(mdt::check_complementary_slackness(kMajority, maj, majority_cover()));
    WeightTable rows(2, 3);
    for (int j = 0; j < 3; ++j) rows.at(0, j) = Rat(1);
    CHECK(mdt::check_complementary_slackness(id, diag, rows));
    mdt::Polyplex empty;
    empty.weight = Rat(0);
    CHECK_FALSE(mdt::check_complementary_slackness(kMajority, empty, majority_cover()));
}

TEST_CASE("strong duality and slackness on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + trial % 4;
        const int n = d == 4 ? 2 : 2 + trial % 2;
        const auto a = oracle::random_matrix(rng, d, n, 0.3 + 0.1 * (trial % 5));
        const auto [wp, k] = mdt::optimal_polyplex(a);
        const auto [wc, t] = mdt::optimal_cover(a);
        CHECK(wp == wc);
        CHECK(wp <= Rat(n));
        CHECK(naive_polyplex_ok(a, k));
        CHECK(naive_is_cover(a, t));
        CHECK(mdt::check_complementary_slackness(a, k, t));
        CHECK(mdt::optimal_cover(a, {mdt::lp::Route::direct}).first == wc);
    }
}

TEST_CASE("integer diagonals") {
    CHECK(mdt::find_diagonal(identity2d(4)).has_value());
    CHECK_FALSE(mdt::find_diagonal(kFullRow).has_value());
    CHECK(mdt::find_diagonal(kFullRow, 3).has_value());
    CHECK_FALSE(mdt::find_diagonal(kMajority).has_value());
}

TEST_CASE("extremality") {
    const auto row = mdt::is_extremal(kFullRow);
    CHECK(row.is_extremal);
    CHECK(row.deficiency == Rat(1));
    const auto maj = mdt::is_extremal(kMajority);
    CHECK(maj.is_extremal);
    CHECK(maj.deficiency == Rat(1, 2));
    const auto full = mdt::is_extremal(MultiMatrix::full(3, 3));
    CHECK_FALSE(full.is_extremal);
    CHECK(full.has_polydiagonal);
    const auto sparse = mdt::is_extremal(MultiMatrix::from_string(2, 3, "100000000"));
    CHECK_FALSE(sparse.is_extremal);
    CHECK(sparse.blocking_entry.has_value());
    CHECK(sparse.blocking_weight < Rat(3));
}

TEST_CASE("extremal matrices regenerate from their optimal cover") {
    std::vector<MultiMatrix> extremal;
    for (int d = 2; d <= 4; ++d) {
        for (const auto& a : mdt::enumerate_extremal_order2(d)) extremal.push_back(a);
    }
    for (int n = 2; n <= 4; ++n) {
        for (const auto& a : mdt::khe_family(n)) extremal.push_back(a);
    }
    for (const auto& a : extremal) {
        const auto rep = mdt::is_extremal(a);
        REQUIRE(rep.is_extremal);
        CHECK(rep.deficiency > Rat(0));
        CHECK(rep.deficiency <= Rat(1));
        const auto cover = mdt::optimal_cover(a).second;
        CHECK(mdt::matrix_from_weights(cover) == a);
        // A zero-rate hyperplane forces every parallel hyperplane full.
        const auto rates = mdt::rate_table(a);
        const std::int64_t full_rate = static_cast<std::int64_t>(a.size() / a.order());
        for (const auto& dir : rates) {
            if (std::find(dir.begin(), dir.end(), 0) == dir.end()) continue;
            for (auto r : dir) CHECK((r == 0 || r == full_rate));
        }
    }
}

TEST_CASE("optimal cover uniqueness") {
    const auto maj = mdt::cover_polytope_is_unique(kMajority);
    CHECK(maj.unique);
    CHECK(mdt::cover_polytope_is_unique(MultiMatrix(2, 3)).unique);
    const auto& rec = mdt::builtin_counterexamples()[0];
    const auto a = mdt::matrix_from_weights(mdt::essential_to_table(rec.first_vertex()));
    const auto u = mdt::cover_polytope_is_unique(a);
    CHECK_FALSE(u.unique);
    int moving = 0;
    for (const auto& [lo, hi] : u.ranges) {
        if (lo != hi) {
            ++moving;
            CHECK(hi - lo == Rat(1, 25));
        }
    }
    CHECK(moving == 2);
}
