#include "doctest.h"

#include "dynideal/quad.hpp"
#include "dynideal/rational.hpp"

using namespace dynideal;

TEST_CASE("rationals are normalized and exact") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(1, 3) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 2).pow(3) == Rational(343, 8));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational text round-trips") {
    for (auto s : {"3/2", "-7/5", "0/1", "123456789123456789/2"}) {
        Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("5") == Rational(5));
}

TEST_CASE("quadratic extension ordering is exact") {
    QuadExt s2 = QuadExt::sqrt2();
    CHECK(s2.sign() == 1);
    CHECK((QuadExt(Rational(1)) < s2));
    CHECK((s2 < QuadExt(Rational(3, 2))));
    // 99/70 > sqrt2 > 41/29
    CHECK((QuadExt(Rational(99, 70)) > s2));
    CHECK((QuadExt(Rational(41, 29)) < s2));
    // (1 - sqrt2) negative, (2 - sqrt2) positive
    CHECK((QuadExt(Rational(1), Rational(-1)).sign() == -1));
    CHECK((QuadExt(Rational(2), Rational(-1)).sign() == 1));
    CHECK(QuadExt(Rational(1, 2), Rational(3)).is_rational() == false);
    CHECK(QuadExt(Rational(1, 2)).as_rational() == Rational(1, 2));
}

TEST_CASE("pell ladders bracket sqrt2 and converge monotonically") {
    QuadExt s2 = QuadExt::sqrt2();
    Rational prev_lo(0), prev_hi(10);
    for (unsigned k = 0; k < 8; ++k) {
        Rational lo = pell_lower(k), hi = pell_upper(k);
        CHECK((QuadExt(lo) < s2));
        CHECK((QuadExt(hi) > s2));
        CHECK(lo > prev_lo);
        CHECK(hi < prev_hi);
        // Pell identities p^2 - 2q^2 = -1 / +1.
        CHECK(lo.num() * lo.num() - 2 * lo.den() * lo.den() == -1);
        CHECK(hi.num() * hi.num() - 2 * hi.den() * hi.den() == 1);
        prev_lo = lo;
        prev_hi = hi;
    }
}

TEST_CASE("quad text round-trips") {
    QuadExt q(Rational(-3, 7), Rational(5, 2));
    CHECK(QuadExt::parse(q.str()) == q);
    CHECK(QuadExt::parse("4/3") == QuadExt(Rational(4, 3)));
}
