#include "doctest.h"

#include "dynideal/iuset.hpp"
#include "helpers.hpp"

using namespace dynideal;

namespace {
IntervalUnionSet iv(const Rational& a, const Rational& b, bool lc = true, bool hc = true) {
    return IntervalUnionSet({Interval{a, b, lc, hc}});
}
}  // namespace

TEST_CASE("canonical form merges touching components") {
    IntervalUnionSet s({Interval::closed(Rational(0), Rational(1)),
                        Interval{Rational(1), Rational(2), false, false}});
    CHECK(s.components().size() == 1);
    CHECK(s == iv(Rational(0), Rational(2), true, false));

    IntervalUnionSet t({Interval{Rational(0), Rational(1), true, false},
                        Interval{Rational(1), Rational(2), false, false}});
    CHECK(t.components().size() == 2);  // the point 1 is genuinely missing

    IntervalUnionSet u({Interval::point(Rational(1)),
                        Interval{Rational(1), Rational(2), false, true}});
    CHECK(u.components().size() == 1);

    // Points inside intervals disappear.
    IntervalUnionSet v({Interval::closed(Rational(0), Rational(2)),
                        Interval::point(Rational(1))});
    CHECK(v.components().size() == 1);
}

TEST_CASE("boolean algebra agrees with membership sampling") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        IntervalUnionSet a = testgen::random_bounded_iuset(rng);
        IntervalUnionSet b = testgen::random_bounded_iuset(rng);
        IntervalUnionSet un = a.unite(b), in = a.intersect(b), di = a.difference(b);
        IntervalUnionSet co = a.complement();
        for (int probe = 0; probe < 24; ++probe) {
            Rational x = rng.rational_in(Rational(-12), Rational(12));
            bool ia = a.contains(x), ib = b.contains(x);
            CHECK(un.contains(x) == (ia || ib));
            CHECK(in.contains(x) == (ia && ib));
            CHECK(di.contains(x) == (ia && !ib));
            CHECK(co.contains(x) == !ia);
        }
        CHECK(a.complement().complement() == a);
        CHECK(a.subset_of(un));
        CHECK(in.subset_of(a));
    }
}

TEST_CASE("gaps partition the complement") {
    IntervalUnionSet a = IntervalUnionSet::from_points({Rational(0), Rational(2)});
    auto gaps = gaps_of(a);
    REQUIRE(gaps.size() == 3);
    CHECK(!gaps[0].lo);
    CHECK(*gaps[0].hi == Rational(0));
    CHECK(*gaps[1].lo == Rational(0));
    CHECK(*gaps[1].hi == Rational(2));
    CHECK(!gaps[2].hi);
}

TEST_CASE("images are exact and respect algebra") {
    Rng rng(123);
    for (int trial = 0; trial < 80; ++trial) {
        IntervalUnionSet a = testgen::random_bounded_iuset(rng);
        PLMap f = testgen::random_plmap(rng);
        PLMap g = testgen::random_plmap(rng);
        CHECK(a.image(PLMap()) == a);
        CHECK(a.image(f.compose(g)) == a.image(g).image(f));
        for (int probe = 0; probe < 10; ++probe) {
            Rational x = rng.rational_in(Rational(-12), Rational(12));
            CHECK(a.image(f).contains(f.apply(x)) == a.contains(x));
        }
        CHECK(a.image(f).bounded() == a.bounded());
    }
}

TEST_CASE("fixed sets and pointwise fixing") {
    CHECK(fixed_set(PLMap()) == IntervalUnionSet({Interval::all()}));
    PLMap t = PLMap::translation(Rational(1));
    CHECK(fixed_set(t).empty());
    CHECK(!fixes_pointwise(t, IntervalUnionSet::from_points({Rational(0)})));

    // Identity on [-10,10], doubling off to the right.
    PLMap f = PLMap::from_anchors(
        {{Rational(-10), Rational(-10)}, {Rational(10), Rational(10)}},
        Rational(1), Rational(2));
    CHECK(fixes_pointwise(f, iv(Rational(0), Rational(1))));
    CHECK(!fixes_pointwise(f, IntervalUnionSet::from_points({Rational(11)})));

    // Non-identity piece fixes exactly its crossing point.
    PLMap g = PLMap::from_anchors({{Rational(0), Rational(0)}, {Rational(2), Rational(3)}});
    CHECK(fixed_set(g).contains(Rational(0)));
    CHECK(!fixed_set(g).contains(Rational(1)));
}
