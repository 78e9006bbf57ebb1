#include "doctest.h"

#include "dynideal/plmap.hpp"
#include "helpers.hpp"

using namespace dynideal;

TEST_CASE("identity and affine application") {
    PLMap id;
    CHECK(id.is_identity());
    CHECK(id.apply(Rational(3, 2)) == Rational(3, 2));

    // Doubling on [0,1]: 0->0, 1->2.
    PLMap f = PLMap::from_anchors({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}});
    CHECK(f.apply(Rational(1, 2)) == Rational(1));
    CHECK(f.apply(Rational(0)) == Rational(0));
    CHECK(f.apply(Rational(1)) == Rational(2));
    // Outside the anchors the end rays have slope 1.
    CHECK(f.apply(Rational(2)) == Rational(3));
    CHECK(f.apply(Rational(-1)) == Rational(-1));
}

TEST_CASE("quad points map through the right piece") {
    PLMap f = PLMap::from_anchors({{Rational(0), Rational(0)}, {Rational(2), Rational(4)}});
    QuadExt s2 = QuadExt::sqrt2();  // inside (0,2)
    CHECK(f.apply(s2) == Rational(2) * s2);
    QuadExt big = QuadExt(Rational(2)) + s2;  // above 2
    CHECK(f.apply(big) == QuadExt(Rational(2)) + (QuadExt(Rational(2)) + s2));
}

TEST_CASE("group laws on random maps") {
    Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        PLMap f = testgen::random_plmap(rng);
        PLMap g = testgen::random_plmap(rng);
        PLMap h = testgen::random_plmap(rng);

        CHECK(f.compose(PLMap()) == f);
        CHECK(PLMap().compose(f) == f);
        CHECK(f.compose(f.inverse()) == PLMap());
        CHECK(f.inverse().compose(f) == PLMap());
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));

        Rational x = rng.rational_in(Rational(-20), Rational(20));
        CHECK(f.inverse().apply(f.apply(x)) == x);
        CHECK(f.compose(g).apply(x) == f.apply(g.apply(x)));
    }
}

TEST_CASE("composite breakpoints refine as expected") {
    PLMap g = PLMap::from_anchors({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}});
    PLMap f = PLMap::from_anchors({{Rational(1), Rational(1)}, {Rational(3), Rational(4)}});
    PLMap fg = f.compose(g);
    // g's breakpoints 0,1 and g^{-1} of f's breakpoints 1,3 -> 1/2, x with g(x)=3 -> 2.
    std::vector<Rational> expect{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    CHECK(fg.breakpoints() == expect);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Rational x = rng.rational_in(Rational(-5), Rational(5));
        CHECK(fg.apply(x) == f.apply(g.apply(x)));
    }
}

TEST_CASE("canonical form drops mergeable pieces") {
    PLMap f({Rational(0)}, {PLMap::Piece{Rational(1), Rational(0)},
                            PLMap::Piece{Rational(1), Rational(0)}});
    CHECK(f.is_identity());
    CHECK(f.breakpoints().empty());
}

TEST_CASE("invalid data is rejected") {
    CHECK_THROWS(PLMap({Rational(0)}, {PLMap::Piece{Rational(1), Rational(0)},
                                       PLMap::Piece{Rational(1), Rational(1)}}));
    CHECK_THROWS(PLMap({}, {PLMap::Piece{Rational(-1), Rational(0)}}));
    CHECK_THROWS(PLMap::from_anchors({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));
}
