#include "doctest.h"

#include "dynideal/textio.hpp"
#include "helpers.hpp"

#include <memory>

using namespace dynideal;

TEST_CASE("canonical text round-trips exactly") {
    Rng rng(2025);
    for (int trial = 0; trial < 80; ++trial) {
        PLMap f = testgen::random_plmap(rng);
        CHECK(text::parse_plmap(text::print(f)) == f);

        IntervalUnionSet s = testgen::random_bounded_iuset(rng);
        CHECK(text::parse_iuset(text::print(s)) == s);

        BlockSet b = testgen::random_wellordered_blockset(rng);
        CHECK(text::parse_blockset(text::print(b)) == b);
    }
}

TEST_CASE("rays and quad limits survive the round trip") {
    IntervalUnionSet rays({Interval{std::nullopt, Rational(0), false, true},
                           Interval{Rational(5), std::nullopt, false, false}});
    CHECK(text::parse_iuset(text::print(rays)) == rays);

    BlockSet pell = BlockSet::single(Block::pell(true, QuadExt(Rational(2), Rational(-1)), 2));
    CHECK(text::parse_blockset(text::print(pell)) == pell);

    auto pat = std::make_shared<const BlockSet>(BlockSet::single(
        Block::geometric(true, Rational(0), Rational(1), Rational(1, 3), true)));
    BlockSet nested = BlockSet::single(
        Block::geometric(false, Rational(4), Rational(2), Rational(2, 5), true, pat));
    CHECK(text::parse_blockset(text::print(nested)) == nested);
}
