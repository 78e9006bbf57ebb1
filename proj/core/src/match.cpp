#include "dynideal/match.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>

namespace dynideal {

PLMap match_finite_sets(std::vector<Rational> d0, std::vector<Rational> d1,
                        const IntervalUnionSet& fix) {
    if (d0.size() != d1.size())
        throw SizeMismatch("match_finite_sets: |d0| != |d1|");
    std::sort(d0.begin(), d0.end());
    std::sort(d1.begin(), d1.end());
    d0.erase(std::unique(d0.begin(), d0.end()), d0.end());
    d1.erase(std::unique(d1.begin(), d1.end()), d1.end());
    if (d0.size() != d1.size())
        throw SizeMismatch("match_finite_sets: sets have different cardinality");

    for (const auto& x : d0)
        if (fix.contains(x)) throw GapMismatch("d0 meets the fixed set at " + x.str());
    for (const auto& y : d1)
        if (fix.contains(y)) throw GapMismatch("d1 meets the fixed set at " + y.str());

    std::vector<std::pair<Rational, Rational>> anchors;
    for (const auto& gap : gaps_of(fix)) {
        std::vector<Rational> g0, g1;
        for (const auto& x : d0)
            if (gap.contains(x)) g0.push_back(x);
        for (const auto& y : d1)
            if (gap.contains(y)) g1.push_back(y);
        if (g0.size() != g1.size())
            throw GapMismatch("gap holds " + std::to_string(g0.size()) + " vs " +
                              std::to_string(g1.size()) + " points");
        for (std::size_t i = 0; i < g0.size(); ++i) anchors.emplace_back(g0[i], g1[i]);
    }
    for (const auto& c : fix.components()) {
        if (c.lo) anchors.emplace_back(*c.lo, *c.lo);
        if (c.hi && (!c.lo || *c.hi != *c.lo)) anchors.emplace_back(*c.hi, *c.hi);
    }
    std::sort(anchors.begin(), anchors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    PLMap pi = PLMap::from_anchors(anchors);
    if (!fixes_pointwise(pi, fix))
        throw GapMismatch("constructed map does not fix the fixed set");
    for (std::size_t i = 0; i < d0.size(); ++i)
        if (pi.apply(d0[i]) != d1[i])
            throw GapMismatch("constructed map misses a target point");
    return pi;
}

}  // namespace dynideal
