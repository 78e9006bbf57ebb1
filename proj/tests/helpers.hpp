// Shared generators for the property-style tests.

#pragma once

#include "dynideal/blockset.hpp"
#include "dynideal/iuset.hpp"
#include "dynideal/plmap.hpp"
#include "dynideal/rng.hpp"

#include <utility>
#include <vector>

namespace dynideal::testgen {

inline PLMap random_plmap(Rng& rng, int max_breaks = 4) {
    int n = static_cast<int>(rng.below(max_breaks + 1));
    std::vector<std::pair<Rational, Rational>> anchors;
    Rational x(-8), y(-8);
    for (int i = 0; i < n; ++i) {
        x += rng.rational_in(Rational(1, 4), Rational(3)).abs();
        y += rng.rational_in(Rational(1, 4), Rational(3)).abs();
        anchors.emplace_back(x, y);
    }
    static const int slopes[] = {1, 1, 2, 3};
    Rational sl(slopes[rng.below(4)]), sr(slopes[rng.below(4)]);
    if (rng.coin()) sl = Rational(1) / sl;
    if (rng.coin()) sr = Rational(1) / sr;
    return PLMap::from_anchors(anchors, sl, sr);
}

inline IntervalUnionSet random_bounded_iuset(Rng& rng, int max_components = 4) {
    int n = static_cast<int>(rng.below(max_components + 1));
    std::vector<Interval> comps;
    for (int i = 0; i < n; ++i) {
        Rational a = rng.rational_in(Rational(-10), Rational(10));
        if (rng.coin()) {
            comps.push_back(Interval::point(a));
        } else {
            Rational b = a + rng.rational_in(Rational(1, 4), Rational(3)).abs();
            comps.push_back(Interval{a, b, rng.coin(), rng.coin()});
        }
    }
    return IntervalUnionSet(std::move(comps));
}

// Well-ordered flat block sets: points plus ascending blocks.
inline BlockSet random_wellordered_blockset(Rng& rng, int max_parts = 3) {
    std::vector<Rational> pts;
    std::vector<Block> blocks;
    int n = 1 + static_cast<int>(rng.below(max_parts));
    for (int i = 0; i < n; ++i) {
        Rational a = rng.rational_in(Rational(-10), Rational(10));
        if (rng.coin()) {
            pts.push_back(a);
        } else {
            Rational span = rng.rational_in(Rational(1, 2), Rational(3)).abs();
            static const std::pair<int, int> ratios[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}};
            auto [p, q] = ratios[rng.below(4)];
            blocks.push_back(Block::geometric(true, a, a + span, Rational(p, q),
                                              rng.coin()));
        }
    }
    return BlockSet(std::move(pts), std::move(blocks));
}

}  // namespace dynideal::testgen
