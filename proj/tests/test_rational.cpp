#include "mdt/errors.hpp"
#include "mdt/rational.hpp"

#include <doctest.h>

using mdt::Rat;

TEST_CASE("rationals are kept reduced with positive denominator") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(4, 2).is_integer());
    CHECK(Rat(4, 2) == Rat(2));
    CHECK_THROWS_AS(Rat(1, 0), mdt::DomainError);
}

TEST_CASE("arithmetic is exact") {
    Rat third(1, 3);
    CHECK(third + third + third == Rat(1));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), mdt::DomainError);
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(abs(Rat(-5, 7)) == Rat(5, 7));
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"0", "1", "-1", "3/4", "-13/25", "123456789012345678901234567891/1024"}) {
        CHECK(Rat::parse(s).str() == s);
    }
    CHECK(Rat::parse("+5") == Rat(5));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(Rat::parse("6/4", true), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse("5/1", true), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse("1/0"), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse(""), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse("x"), mdt::ParseError);
    CHECK_THROWS_AS(Rat::parse("1.5"), mdt::ParseError);
}

TEST_CASE("integer multiples and binomials") {
    CHECK(mdt::is_integer_multiple(Rat(3, 25), Rat(1, 25)));
    CHECK_FALSE(mdt::is_integer_multiple(Rat(1, 10), Rat(1, 25)));
    CHECK(mdt::is_integer_multiple(Rat(0), Rat(1, 3)));
    CHECK(mdt::binomial(4, 1) == 4);
    CHECK(mdt::binomial(8, 4) == 70);
    CHECK(mdt::binomial(5, 7) == 0);
    CHECK(mdt::binomial(60, 30) == mdt::BigInt("118264581564861424"));
}
