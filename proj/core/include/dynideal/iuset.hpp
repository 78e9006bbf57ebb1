// Finite unions of rational points and intervals, in canonical form.
//
// Components are pairwise disjoint, non-adjacent and sorted, so two sets are
// equal iff their representations are. Endpoints may be infinite (rays).
// The type is closed under union, intersection, difference, complement and
// monotone piecewise-linear images; all of it exact.

#pragma once

#include "dynideal/plmap.hpp"
#include "dynideal/quad.hpp"
#include "dynideal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynideal {

struct Interval {
    std::optional<Rational> lo;  // nullopt = -infinity
    std::optional<Rational> hi;  // nullopt = +infinity
    bool lo_closed = true;       // meaningful only when the end is finite
    bool hi_closed = true;

    static Interval point(const Rational& p) { return Interval{p, p, true, true}; }
    static Interval closed(const Rational& a, const Rational& b) {
        return Interval{a, b, true, true};
    }
    static Interval open(const Rational& a, const Rational& b) {
        return Interval{a, b, false, false};
    }
    static Interval all() { return Interval{std::nullopt, std::nullopt, false, false}; }

    bool is_point() const { return lo && hi && *lo == *hi; }
    bool bounded() const { return lo.has_value() && hi.has_value(); }
    bool contains(const Rational& x) const;
    bool empty_as_stated() const {
        return lo && hi && (*lo > *hi || (*lo == *hi && !(lo_closed && hi_closed)));
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalUnionSet {
public:
    IntervalUnionSet() = default;
    explicit IntervalUnionSet(std::vector<Interval> components);

    static IntervalUnionSet from_points(std::vector<Rational> pts);
    static IntervalUnionSet single(const Interval& iv) { return IntervalUnionSet({iv}); }

    const std::vector<Interval>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    bool bounded() const;

    bool contains(const Rational& x) const;

    IntervalUnionSet unite(const IntervalUnionSet& other) const;
    IntervalUnionSet intersect(const IntervalUnionSet& other) const;
    IntervalUnionSet complement() const;
    IntervalUnionSet difference(const IntervalUnionSet& other) const {
        return intersect(other.complement());
    }
    bool subset_of(const IntervalUnionSet& other) const {
        return difference(other).empty();
    }

    // Hull endpoints of a bounded nonempty set (closedness ignored).
    Rational inf() const;
    Rational sup() const;

    // Exact image under an order automorphism.
    IntervalUnionSet image(const PLMap& f) const;

    friend bool operator==(const IntervalUnionSet&, const IntervalUnionSet&) = default;

    std::string str() const;

private:
    void canonicalize();
    std::vector<Interval> comps_;
};

// The exact fixed-point set of a PL automorphism: identity pieces contribute
// their whole domain, other pieces at most one solution of x = sx + o.
IntervalUnionSet fixed_set(const PLMap& f);

// f fixes s pointwise, decided exactly (s subset of fixed_set(f)).
bool fixes_pointwise(const PLMap& f, const IntervalUnionSet& s);

// Maximal intervals disjoint from s ("gaps"), including unbounded ones.
std::vector<Interval> gaps_of(const IntervalUnionSet& s);

}  // namespace dynideal
