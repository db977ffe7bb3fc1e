#include "mdt/duality.hpp"
#include "mdt/errors.hpp"
#include "mdt/planar.hpp"
#include "mdt/threshold.hpp"

#include "oracles.hpp"

#include <doctest.h>

using mdt::MultiMatrix;
using mdt::Rat;

TEST_CASE("stepped matrices") {
    CHECK(mdt::is_stepped(MultiMatrix::from_string(2, 2, "1110")));
    CHECK_FALSE(mdt::is_stepped(MultiMatrix::from_string(2, 2, "1001")));
    CHECK(mdt::is_stepped(MultiMatrix(2, 3)));
    CHECK_FALSE(mdt::is_stepped(MultiMatrix::from_string(2, 3, "011000000")));
    CHECK_THROWS_AS(mdt::is_stepped(MultiMatrix(3, 2)), mdt::ShapeError);
}

TEST_CASE("outer indices and stepped weights") {
    const auto a = MultiMatrix::from_string(2, 2, "1110");
    CHECK(mdt::outer_indices(a) == mdt::OuterIndexList{{0, 1}, {1, 0}});
    const auto t = mdt::stepped_weights(a);
    CHECK(t.at(0, 0) == Rat(2, 3));
    CHECK(t.at(0, 1) == Rat(1, 3));
    CHECK(t.at(1, 0) == Rat(2, 3));
    CHECK(t.at(1, 1) == Rat(1, 3));
    CHECK(t.coverage({0, 0}) == Rat(4, 3));
    CHECK(t.coverage({0, 1}) == Rat(1));
    CHECK(t.coverage({1, 0}) == Rat(1));
    CHECK(t.coverage({1, 1}) == Rat(2, 3));

    const auto full = MultiMatrix::full(2, 3);
    CHECK(mdt::outer_indices(full) == mdt::OuterIndexList{{2, 2}});
    const auto tf = mdt::stepped_weights(full);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(tf.at(i, j) == Rat(1, 2));
    }
    CHECK(mdt::stepped_weights(MultiMatrix(2, 3)).total() == Rat(0));
    CHECK_THROWS_AS(mdt::stepped_weights(MultiMatrix::from_string(2, 2, "1001")), mdt::DomainError);
}

TEST_CASE("stepped weights regenerate every stepped matrix up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        // Stepped matrices are nonincreasing row lengths r_0 >= ... >= r_{n-1}.
        std::vector<int> len(static_cast<std::size_t>(n), 0);
        std::size_t count = 0;
        while (true) {
            MultiMatrix a(2, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < len[i]; ++j) a.set(static_cast<std::size_t>(i) * n + j, true);
            }
            CHECK(mdt::is_stepped(a));
            CHECK(mdt::matrix_from_weights(mdt::stepped_weights(a)) == a);
            ++count;
            int t = n - 1;
            while (t >= 0 && len[t] == (t == 0 ? n : len[t - 1])) --t;
            if (t < 0) break;
            ++len[t];
            for (int u = t + 1; u < n; ++u) len[u] = 0;
        }
        CHECK(count == static_cast<std::size_t>(mdt::binomial(2 * n, n).get_ui()));
    }
}

TEST_CASE("khe matrices") {
    const auto a = mdt::khe_matrix(2, 1, 2);
    CHECK(a.bit_string() == "1100");
    for (int n = 2; n <= 4; ++n) {
        for (const auto& k : mdt::khe_family(n)) {
            const auto rep = mdt::is_extremal(k);
            CHECK(rep.is_extremal);
            CHECK(rep.deficiency == Rat(1));
        }
    }
    CHECK_THROWS_AS(mdt::khe_matrix(3, 1, 1), mdt::DomainError);
    CHECK_THROWS_AS(mdt::khe_matrix(3, 0, 4), mdt::DomainError);
}

TEST_CASE("stepped representatives") {
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        std::vector<std::uint8_t> bits(9);
        for (int k = 0; k < 9; ++k) bits[k] = (mask >> k) & 1;
        const MultiMatrix a(2, 3, bits);
        const auto rep = mdt::stepped_representative(a);
        CHECK(rep.has_value() == oracle::lines_form_chains(a));
        if (rep) {
            CHECK(mdt::is_stepped(*rep));
            CHECK(oracle::brute_equivalent(a, *rep));
        }
    }
}

TEST_CASE("planar census for small orders") {
    const auto c2 = mdt::enumerate_2d(2);
    CHECK(c2.extremal_classes.size() == 1);
    CHECK(c2.stepped_count == 6);
    const auto c3 = mdt::enumerate_2d(3);
    CHECK(c3.extremal_classes.size() == 2);
    CHECK(c3.stepped_count == 20);
    CHECK_THROWS_AS(mdt::enumerate_2d(5), mdt::BudgetExceeded);
}
