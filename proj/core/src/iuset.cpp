#include "dynideal/iuset.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

bool Interval::contains(const Rational& x) const {
    if (lo) {
        if (x < *lo) return false;
        if (x == *lo && !lo_closed) return false;
    }
    if (hi) {
        if (x > *hi) return false;
        if (x == *hi && !hi_closed) return false;
    }
    return true;
}

IntervalUnionSet::IntervalUnionSet(std::vector<Interval> components)
    : comps_(std::move(components)) {
    canonicalize();
}

IntervalUnionSet IntervalUnionSet::from_points(std::vector<Rational> pts) {
    std::vector<Interval> comps;
    comps.reserve(pts.size());
    for (auto& p : pts) comps.push_back(Interval::point(p));
    return IntervalUnionSet(std::move(comps));
}

namespace {

// Order by left endpoint; -infinity first, closed before open at ties.
bool starts_before(const Interval& a, const Interval& b) {
    if (!a.lo) return b.lo.has_value();
    if (!b.lo) return false;
    if (*a.lo != *b.lo) return *a.lo < *b.lo;
    return a.lo_closed && !b.lo_closed;
}

// True when a's closure reaches b's start, i.e. the two merge.
bool touches(const Interval& a, const Interval& b) {
    if (!a.hi || !b.lo) return true;  // sorted, so overlap is forced
    if (*a.hi > *b.lo) return true;
    if (*a.hi < *b.lo) return false;
    return a.hi_closed || b.lo_closed;
}

}  // namespace

void IntervalUnionSet::canonicalize() {
    std::vector<Interval> in;
    in.reserve(comps_.size());
    for (auto& c : comps_)
        if (!c.empty_as_stated()) in.push_back(c);
    std::sort(in.begin(), in.end(), starts_before);
    std::vector<Interval> out;
    for (auto& c : in) {
        if (!out.empty() && touches(out.back(), c)) {
            Interval& prev = out.back();
            // Extend the right end if c reaches further.
            if (!c.hi) {
                prev.hi.reset();
                prev.hi_closed = false;
            } else if (prev.hi) {
                if (*c.hi > *prev.hi) {
                    prev.hi = c.hi;
                    prev.hi_closed = c.hi_closed;
                } else if (*c.hi == *prev.hi) {
                    prev.hi_closed = prev.hi_closed || c.hi_closed;
                }
            }
        } else {
            out.push_back(c);
        }
    }
    comps_ = std::move(out);
}

bool IntervalUnionSet::bounded() const {
    for (const auto& c : comps_)
        if (!c.lo || !c.hi) return false;
    return true;
}

bool IntervalUnionSet::contains(const Rational& x) const {
    for (const auto& c : comps_) {
        if (c.lo && x < *c.lo) break;
        if (c.contains(x)) return true;
    }
    return false;
}

IntervalUnionSet IntervalUnionSet::unite(const IntervalUnionSet& other) const {
    std::vector<Interval> all = comps_;
    all.insert(all.end(), other.comps_.begin(), other.comps_.end());
    return IntervalUnionSet(std::move(all));
}

IntervalUnionSet IntervalUnionSet::intersect(const IntervalUnionSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : comps_) {
        for (const auto& b : other.comps_) {
            Interval r;
            if (!a.lo) { r.lo = b.lo; r.lo_closed = b.lo_closed; }
            else if (!b.lo) { r.lo = a.lo; r.lo_closed = a.lo_closed; }
            else if (*a.lo > *b.lo) { r.lo = a.lo; r.lo_closed = a.lo_closed; }
            else if (*b.lo > *a.lo) { r.lo = b.lo; r.lo_closed = b.lo_closed; }
            else { r.lo = a.lo; r.lo_closed = a.lo_closed && b.lo_closed; }
            if (!a.hi) { r.hi = b.hi; r.hi_closed = b.hi_closed; }
            else if (!b.hi) { r.hi = a.hi; r.hi_closed = a.hi_closed; }
            else if (*a.hi < *b.hi) { r.hi = a.hi; r.hi_closed = a.hi_closed; }
            else if (*b.hi < *a.hi) { r.hi = b.hi; r.hi_closed = b.hi_closed; }
            else { r.hi = a.hi; r.hi_closed = a.hi_closed && b.hi_closed; }
            if (!r.empty_as_stated()) out.push_back(r);
        }
    }
    return IntervalUnionSet(std::move(out));
}

IntervalUnionSet IntervalUnionSet::complement() const {
    if (comps_.empty()) return IntervalUnionSet({Interval::all()});
    std::vector<Interval> out;
    const Interval& first = comps_.front();
    if (first.lo)
        out.push_back(Interval{std::nullopt, first.lo, false, !first.lo_closed});
    for (std::size_t i = 0; i + 1 < comps_.size(); ++i) {
        const Interval& a = comps_[i];
        const Interval& b = comps_[i + 1];
        out.push_back(Interval{a.hi, b.lo, !a.hi_closed, !b.lo_closed});
    }
    const Interval& last = comps_.back();
    if (last.hi)
        out.push_back(Interval{last.hi, std::nullopt, !last.hi_closed, false});
    return IntervalUnionSet(std::move(out));
}

Rational IntervalUnionSet::inf() const {
    if (comps_.empty() || !comps_.front().lo)
        throw Unbounded("IntervalUnionSet::inf on empty/unbounded set");
    return *comps_.front().lo;
}

Rational IntervalUnionSet::sup() const {
    if (comps_.empty() || !comps_.back().hi)
        throw Unbounded("IntervalUnionSet::sup on empty/unbounded set");
    return *comps_.back().hi;
}

IntervalUnionSet IntervalUnionSet::image(const PLMap& f) const {
    std::vector<Interval> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) {
        Interval r = c;
        if (r.lo) r.lo = f.apply(*r.lo);
        if (r.hi) r.hi = f.apply(*r.hi);
        out.push_back(r);
    }
    return IntervalUnionSet(std::move(out));
}

std::string IntervalUnionSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        if (i) os << ' ';
        if (c.is_point()) {
            os << c.lo->str();
            continue;
        }
        os << (c.lo && c.lo_closed ? '[' : '(');
        os << (c.lo ? c.lo->str() : "-inf") << ',' << (c.hi ? c.hi->str() : "+inf");
        os << (c.hi && c.hi_closed ? ']' : ')');
    }
    os << '}';
    return os.str();
}

IntervalUnionSet fixed_set(const PLMap& f) {
    std::vector<Interval> out;
    const auto& breaks = f.breakpoints();
    const auto& pieces = f.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::optional<Rational> lo =
            i == 0 ? std::nullopt : std::optional<Rational>(breaks[i - 1]);
        std::optional<Rational> hi =
            i == breaks.size() ? std::nullopt : std::optional<Rational>(breaks[i]);
        const auto& p = pieces[i];
        if (p.slope == Rational(1)) {
            if (p.offset == Rational(0))
                out.push_back(Interval{lo, hi, lo.has_value(), hi.has_value()});
            continue;
        }
        Rational star = p.offset / (Rational(1) - p.slope);
        bool inside = (!lo || star >= *lo) && (!hi || star <= *hi);
        if (inside) out.push_back(Interval::point(star));
    }
    return IntervalUnionSet(std::move(out));
}

bool fixes_pointwise(const PLMap& f, const IntervalUnionSet& s) {
    return s.subset_of(fixed_set(f));
}

std::vector<Interval> gaps_of(const IntervalUnionSet& s) {
    return s.complement().components();
}

}  // namespace dynideal
