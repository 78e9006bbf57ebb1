#include "dynideal/blockset.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dynideal {

namespace {

Rational pell_value(bool ascending, const QuadExt& limit, unsigned k) {
    const Rational& beta = limit.irr_part();
    bool lower = ascending == (beta.sign() > 0);
    Rational u = lower ? pell_lower(k) : pell_upper(k);
    return limit.rat_part() + beta * u;
}

}  // namespace

Block Block::geometric(bool ascending, Rational start, Rational limit, Rational ratio,
                       bool limit_included, BlockSetPtr pattern) {
    if (!(ratio > Rational(0) && ratio < Rational(1)))
        throw ConfigError("Block: ratio must lie in (0,1)");
    if (ascending ? !(start < limit) : !(start > limit))
        throw ConfigError("Block: start/limit order inconsistent with orientation");
    Block b;
    b.ascending = ascending;
    b.limit_included = limit_included;
    b.start = std::move(start);
    b.limit = QuadExt(std::move(limit));
    b.ratio = std::move(ratio);
    b.pattern = std::move(pattern);
    return b;
}

Block Block::pell(bool ascending, QuadExt limit, unsigned index, BlockSetPtr pattern) {
    if (limit.is_rational())
        throw ConfigError("Block::pell: limit must be irrational");
    Block b;
    b.ascending = ascending;
    b.limit_included = false;
    b.limit = std::move(limit);
    b.ratio = Rational(1, 2);  // conventional; unused by the Pell law
    b.pell_index = index;
    b.start = pell_value(ascending, b.limit, index);
    b.pattern = std::move(pattern);
    return b;
}

Rational Block::element(unsigned k) const {
    if (is_pell()) return pell_value(ascending, limit, pell_index + k);
    const Rational L = limit.as_rational();
    return L - (L - start) * ratio.pow(k);
}

Rational Block::half_gap(unsigned k) const {
    Rational a = element(k), b = element(k + 1);
    return (ascending ? b - a : a - b) / Rational(2);
}

bool operator==(const Block& a, const Block& b) {
    if (a.ascending != b.ascending || a.limit_included != b.limit_included ||
        a.start != b.start || a.limit != b.limit)
        return false;
    if (a.is_pell()) {
        if (a.pell_index != b.pell_index) return false;
    } else {
        if (a.ratio != b.ratio) return false;
    }
    if (!a.pattern && !b.pattern) return true;
    if (!a.pattern || !b.pattern) return false;
    return *a.pattern == *b.pattern;
}

namespace {

// Cell k of a block as a standalone BlockSet: the affine copy of the pattern
// anchored at e_k, squeezed within half the gap towards the next element.
BlockSet cell_copy(const Block& b, unsigned k) {
    Rational anchor = b.element(k);
    if (!b.pattern) return BlockSet::from_points({anchor});
    Rational w = b.half_gap(k);
    return b.pattern->affine_image(b.ascending ? w : -w, anchor);
}

bool pattern_equal(const BlockSetPtr& a, const BlockSetPtr& b) {
    if (!a && !b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::string pattern_key(const BlockSetPtr& p) { return p ? p->str() : ""; }

bool block_less(const Block& a, const Block& b) {
    if (a.inf() != b.inf()) return a.inf() < b.inf();
    if (a.sup() != b.sup()) return a.sup() < b.sup();
    if (a.ascending != b.ascending) return a.ascending;
    if (a.start != b.start) return a.start < b.start;
    if (a.is_pell() != b.is_pell()) return b.is_pell();
    if (!a.is_pell() && a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.is_pell() && a.pell_index != b.pell_index) return a.pell_index < b.pell_index;
    if (a.limit_included != b.limit_included) return b.limit_included;
    return pattern_key(a.pattern) < pattern_key(b.pattern);
}

}  // namespace

bool Block::contains(const Rational& x) const {
    QuadExt qx{x};
    if (ascending) {
        if (x < start) return false;
        if (qx >= limit) return qx == limit && limit_included;
        // Walk to the last scaffold element <= x.
        unsigned k = 0;
        Rational e = element(0);
        while (true) {
            Rational nxt = element(k + 1);
            if (nxt > x) break;
            e = nxt;
            ++k;
        }
        if (e == x) return true;
        if (!pattern) return false;
        Rational w = half_gap(k);
        if (x > e + w) return false;
        return pattern->contains((x - e) / w);
    }
    if (x > start) return false;
    if (qx <= limit) return qx == limit && limit_included;
    unsigned k = 0;
    Rational e = element(0);
    while (true) {
        Rational nxt = element(k + 1);
        if (nxt < x) break;
        e = nxt;
        ++k;
    }
    if (e == x) return true;
    if (!pattern) return false;
    Rational w = half_gap(k);
    if (x < e - w) return false;
    return pattern->contains((e - x) / w);
}

BlockSet::BlockSet(std::vector<Rational> points, std::vector<Block> blocks)
    : points_(std::move(points)), blocks_(std::move(blocks)) {
    canonicalize();
}

BlockSet BlockSet::from_points(std::vector<Rational> pts) {
    return BlockSet(std::move(pts), {});
}

void BlockSet::canonicalize() {
    // Pattern sanity: nonempty canonical subsets of [0,1] anchored at 0.
    std::vector<Block> bs;
    for (auto& b : blocks_) {
        if (b.pattern && b.pattern->empty()) {
            if (b.limit_included) points_.push_back(b.limit.as_rational());
            continue;
        }
        if (b.pattern) {
            if (!b.pattern->contains(Rational(0)) || b.pattern->inf() != QuadExt(Rational(0)) ||
                b.pattern->sup() > QuadExt(Rational(1)))
                throw ConfigError("Block pattern must live in [0,1] with min 0");
            if (b.pattern->blocks().empty() && b.pattern->points().size() == 1)
                b.pattern = nullptr;  // {0} is the implicit pattern
        }
        if (b.limit_included && b.is_pell())
            throw ConfigError("Block: irrational limit cannot be included");
        bs.push_back(std::move(b));
    }

    // Merge scaffold-aligned blocks with the same limit.
    std::vector<Block> merged;
    for (auto& b : bs) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (m.ascending != b.ascending || m.limit != b.limit ||
                !pattern_equal(m.pattern, b.pattern))
                continue;
            if (m.is_pell()) {
                m.pell_index = std::min(m.pell_index, b.pell_index);
                m.start = pell_value(m.ascending, m.limit, m.pell_index);
                absorbed = true;
                break;
            }
            if (m.ratio != b.ratio) continue;
            const Rational L = m.limit.as_rational();
            Rational c1 = m.ascending ? L - m.start : m.start - L;
            Rational c2 = m.ascending ? L - b.start : b.start - L;
            if (c1 < c2) std::swap(c1, c2);  // c1 the earlier (farther) start
            Rational t = c1;
            bool aligned = false;
            while (t >= c2) {
                if (t == c2) { aligned = true; break; }
                t *= m.ratio;
            }
            if (!aligned) continue;
            Rational far = std::max(m.ascending ? L - m.start : m.start - L,
                                    m.ascending ? L - b.start : b.start - L);
            m.start = m.ascending ? L - far : L + far;
            m.limit_included = m.limit_included || b.limit_included;
            absorbed = true;
            break;
        }
        if (!absorbed) merged.push_back(std::move(b));
    }

    // Points: sorted, unique, not shadowed by a block; a point on a rational
    // limit becomes the limit_included flag.
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    std::vector<Rational> pts;
    for (auto& p : points_) {
        bool drop = false;
        for (auto& m : merged) {
            if (!m.is_pell() && !m.limit_included && m.limit == QuadExt(p)) {
                m.limit_included = true;
                drop = true;
                break;
            }
            if (m.contains(p)) { drop = true; break; }
        }
        if (!drop) pts.push_back(p);
    }
    points_ = std::move(pts);
    std::sort(merged.begin(), merged.end(), block_less);
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    blocks_ = std::move(merged);
}

bool BlockSet::contains(const Rational& x) const {
    if (std::binary_search(points_.begin(), points_.end(), x)) return true;
    for (const auto& b : blocks_)
        if (b.contains(x)) return true;
    return false;
}

BlockSet BlockSet::unite(const BlockSet& other) const {
    std::vector<Rational> pts = points_;
    pts.insert(pts.end(), other.points_.begin(), other.points_.end());
    std::vector<Block> bs = blocks_;
    bs.insert(bs.end(), other.blocks_.begin(), other.blocks_.end());
    return BlockSet(std::move(pts), std::move(bs));
}

BlockSet BlockSet::affine_image(const Rational& a, const Rational& b) const {
    if (a.is_zero()) throw ConfigError("BlockSet::affine_image: zero slope");
    std::vector<Rational> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(a * p + b);
    std::vector<Block> bs;
    bs.reserve(blocks_.size());
    for (const auto& blk : blocks_) {
        Block nb = blk;
        nb.ascending = (a.sign() > 0) ? blk.ascending : !blk.ascending;
        nb.start = a * blk.start + b;
        nb.limit = QuadExt(b) + a * blk.limit;
        // ratio / pell_index / pattern carry over unchanged: the scaffold law
        // and the relative cell geometry are affine-invariant.
        bs.push_back(std::move(nb));
    }
    return BlockSet(std::move(pts), std::move(bs));
}

QuadExt BlockSet::inf() const {
    if (empty()) throw ConfigError("BlockSet::inf of empty set");
    std::optional<QuadExt> best;
    for (const auto& p : points_)
        if (!best || QuadExt(p) < *best) best = QuadExt(p);
    for (const auto& b : blocks_)
        if (!best || b.inf() < *best) best = b.inf();
    return *best;
}

QuadExt BlockSet::sup() const {
    if (empty()) throw ConfigError("BlockSet::sup of empty set");
    std::optional<QuadExt> best;
    for (const auto& p : points_)
        if (!best || QuadExt(p) > *best) best = QuadExt(p);
    for (const auto& b : blocks_)
        if (!best || b.sup() > *best) best = b.sup();
    return *best;
}

Rational BlockSet::min() const {
    if (empty()) throw ConfigError("BlockSet::min of empty set");
    std::optional<Rational> best;
    for (const auto& p : points_)
        if (!best || p < *best) best = p;
    for (const auto& b : blocks_) {
        if (!b.ascending)
            throw ConfigError("BlockSet::min: descending block has no least element");
        if (!best || b.start < *best) best = b.start;
    }
    return *best;
}

std::vector<Rational> BlockSet::enumerate(unsigned budget) const {
    std::vector<Rational> out = points_;
    for (const auto& b : blocks_) {
        unsigned anchors = std::min(budget, 40u);
        for (unsigned k = 0; k < anchors; ++k) out.push_back(b.element(k));
        if (b.pattern) {
            for (unsigned k = 0; k < std::min(budget, 6u); ++k) {
                auto sub = cell_copy(b, k).enumerate(6);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        if (b.limit_included) out.push_back(b.limit.as_rational());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > budget) out.resize(budget);
    return out;
}

BlockSet reflect(const BlockSet& s) { return s.affine_image(Rational(-1), Rational(0)); }

namespace {

Interval reflect_window(const Interval& w) {
    Interval r;
    if (w.hi) r.lo = -*w.hi;
    if (w.lo) r.hi = -*w.lo;
    r.lo_closed = w.hi_closed;
    r.hi_closed = w.lo_closed;
    return r;
}

}  // namespace

BlockSet BlockSet::restrict(const Interval& window) const {
    std::vector<Rational> pts;
    for (const auto& p : points_)
        if (window.contains(p)) pts.push_back(p);
    BlockSet out = BlockSet::from_points(std::move(pts));

    for (const auto& b : blocks_) {
        if (!b.ascending) {
            // Reduce to the ascending case through reflection.
            BlockSet r = BlockSet::single(b).affine_image(Rational(-1), Rational(0));
            out = out.unite(reflect(r.restrict(reflect_window(window))));
            continue;
        }
        QuadExt lim = b.limit;
        // Entirely outside?
        if (window.lo && lim < QuadExt(*window.lo)) continue;
        if (window.hi && QuadExt(b.start) > QuadExt(*window.hi)) continue;

        if (window.lo && lim <= QuadExt(*window.lo)) {
            // Only the limit point can make it (lim == lo, rational).
            if (b.limit_included && window.contains(b.limit.as_rational()))
                out = out.unite(BlockSet::from_points({b.limit.as_rational()}));
            continue;
        }

        if (window.hi && lim > QuadExt(*window.hi)) {
            // The tail escapes above: finitely many head cells survive.
            std::vector<BlockSet> parts;
            for (unsigned k = 0;; ++k) {
                Rational e = b.element(k);
                if (e > *window.hi) break;
                parts.push_back(cell_copy(b, k).restrict(window));
            }
            for (auto& p : parts) out = out.unite(p);
            continue;
        }

        // Tail survives; trim the head below the window's left end.
        unsigned tail_from = 0;
        if (window.lo) {
            const Rational& lo = *window.lo;
            while (true) {
                Rational e = b.element(tail_from);
                if (e > lo || (e == lo && window.lo_closed)) break;
                ++tail_from;
            }
            for (unsigned k = 0; k < tail_from; ++k)
                out = out.unite(cell_copy(b, k).restrict(window));
        }
        bool included = b.limit_included;
        if (included && !window.contains(b.limit.as_rational())) included = false;
        Block tail = b.is_pell()
                         ? Block::pell(true, b.limit, b.pell_index + tail_from, b.pattern)
                         : Block::geometric(true, b.element(tail_from),
                                            b.limit.as_rational(), b.ratio, included,
                                            b.pattern);
        out = out.unite(BlockSet::single(tail));
    }
    return out;
}

bool BlockSet::subset_of(const BlockSet& other) const {
    for (const auto& p : points_)
        if (!other.contains(p)) return false;
    for (const auto& b : blocks_) {
        bool found = false;
        for (const auto& c : other.blocks_) {
            if (c.ascending != b.ascending || c.limit != b.limit ||
                !pattern_equal(c.pattern, b.pattern))
                continue;
            if (b.limit_included && !c.limit_included) continue;
            if (b.is_pell()) {
                if (c.pell_index <= b.pell_index) { found = true; break; }
                continue;
            }
            if (c.ratio != b.ratio) continue;
            const Rational L = b.limit.as_rational();
            Rational cb = b.ascending ? L - b.start : b.start - L;
            Rational cc = b.ascending ? L - c.start : c.start - L;
            if (cc < cb) continue;  // c starts later than b
            Rational t = cc;
            while (t > cb) t *= b.ratio;
            if (t == cb) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

std::string BlockSet::str() const {
    std::ostringstream os;
    os << "bs{pts[";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) os << ' ';
        os << points_[i];
    }
    os << "]";
    for (const auto& b : blocks_) {
        os << (b.ascending ? " asc(" : " desc(");
        os << b.start << "->" << b.limit.str();
        if (b.is_pell()) os << " pell@" << b.pell_index;
        else os << " r=" << b.ratio;
        if (b.limit_included) os << " incl";
        if (b.pattern) os << " pat=" << b.pattern->str();
        os << ')';
    }
    os << '}';
    return os.str();
}

// ---- predicates ----

namespace {

PLMap conjugate_by_negation(const PLMap& f) {
    // g(x) = -f(-x); increasing with the same positive slopes.
    std::vector<Rational> breaks;
    const auto& fb = f.breakpoints();
    for (auto it = fb.rbegin(); it != fb.rend(); ++it) breaks.push_back(-*it);
    std::vector<PLMap::Piece> pieces;
    const auto& fp = f.pieces();
    for (auto it = fp.rbegin(); it != fp.rend(); ++it)
        pieces.push_back(PLMap::Piece{it->slope, -it->offset});
    return PLMap(std::move(breaks), std::move(pieces));
}

}  // namespace

BlockSet image_set(const PLMap& f, const BlockSet& s) {
    std::vector<Rational> pts;
    pts.reserve(s.points().size());
    for (const auto& p : s.points()) pts.push_back(f.apply(p));
    BlockSet out = BlockSet::from_points(std::move(pts));

    for (const auto& b : s.blocks()) {
        if (!b.ascending) {
            PLMap g = conjugate_by_negation(f);
            BlockSet r = image_set(g, reflect(BlockSet::single(b)));
            out = out.unite(reflect(r));
            continue;
        }
        // Tail piece: the one whose domain contains the approach to the limit
        // from below. piece_at(QuadExt) picks the left piece at rational
        // breakpoints, which is exactly the from-below side.
        const auto& breaks = f.breakpoints();
        std::size_t lo_idx = 0, hi_idx = breaks.size();
        while (lo_idx < hi_idx) {
            std::size_t mid = (lo_idx + hi_idx) / 2;
            if (QuadExt(breaks[mid]) < b.limit) lo_idx = mid + 1; else hi_idx = mid;
        }
        const PLMap::Piece& piece = f.pieces()[lo_idx];
        std::optional<Rational> dom_lo =
            lo_idx == 0 ? std::nullopt : std::optional<Rational>(breaks[lo_idx - 1]);

        unsigned tail_from = 0;
        if (dom_lo) {
            while (b.element(tail_from) < *dom_lo) ++tail_from;
        }
        for (unsigned k = 0; k < tail_from; ++k)
            out = out.unite(image_set(f, cell_copy(b, k)));

        QuadExt new_limit = piece.eval(b.limit);
        Block tail = b.is_pell()
                         ? Block::pell(true, new_limit, b.pell_index + tail_from, b.pattern)
                         : Block::geometric(true, piece.eval(b.element(tail_from)),
                                            new_limit.as_rational(), b.ratio,
                                            b.limit_included, b.pattern);
        out = out.unite(BlockSet::single(tail));
    }
    return out;
}

bool is_well_ordered(const BlockSet& s) {
    for (const auto& b : s.blocks()) {
        if (!b.ascending) return false;
        if (b.pattern && !is_well_ordered(*b.pattern)) return false;
    }
    return true;
}

namespace {

bool bounded_below_every_rec(const BlockSet& s, bool flipped) {
    for (const auto& b : s.blocks()) {
        bool effectively_ascending = b.ascending != flipped;
        if (effectively_ascending && b.limit.is_rational()) return false;
        if (b.pattern && !bounded_below_every_rec(*b.pattern, flipped != !b.ascending))
            return false;
    }
    return true;
}

}  // namespace

bool is_bounded_below_every(const BlockSet& s) {
    return bounded_below_every_rec(s, false);
}

unsigned cb_rank(const BlockSet& s) {
    if (s.empty()) return 0;
    unsigned rank = s.points().empty() && !s.blocks().empty() ? 0 : 1;
    for (const auto& b : s.blocks()) {
        unsigned inner = b.pattern ? cb_rank(*b.pattern) : 1;
        rank = std::max(rank, inner + 1);
    }
    return rank;
}

bool is_closed(const BlockSet& s) {
    for (const auto& b : s.blocks()) {
        if (b.is_pell() || !b.limit_included) return false;
        if (b.pattern && !is_closed(*b.pattern)) return false;
    }
    return true;
}

namespace {

// s a subset of the interval-union F, decided on the representation.
bool within(const BlockSet& s, const IntervalUnionSet& F);

bool block_within(const Block& b, const IntervalUnionSet& F) {
    if (!b.ascending) {
        BlockSet r = reflect(BlockSet::single(b));
        // Reflect F by hand: image() only takes increasing maps.
        std::vector<Interval> comps;
        for (auto it = F.components().rbegin(); it != F.components().rend(); ++it) {
            Interval c;
            if (it->hi) c.lo = -*it->hi;
            if (it->lo) c.hi = -*it->lo;
            c.lo_closed = it->hi_closed;
            c.hi_closed = it->lo_closed;
            comps.push_back(c);
        }
        return within(r, IntervalUnionSet(std::move(comps)));
    }
    if (b.limit_included && !F.contains(b.limit.as_rational())) return false;
    // The tail needs one component C with C.lo < limit <= C.hi.
    const Interval* host = nullptr;
    for (const auto& c : F.components()) {
        bool lo_ok = !c.lo || QuadExt(*c.lo) < b.limit;
        bool hi_ok = !c.hi || b.limit <= QuadExt(*c.hi);
        if (lo_ok && hi_ok) { host = &c; break; }
    }
    if (!host) return false;
    unsigned tail_from = 0;
    if (host->lo) {
        while (true) {
            Rational e = b.element(tail_from);
            if (e > *host->lo || (e == *host->lo && host->lo_closed)) break;
            ++tail_from;
        }
    }
    for (unsigned k = 0; k < tail_from; ++k)
        if (!within(cell_copy(b, k), F)) return false;
    return true;
}

bool within(const BlockSet& s, const IntervalUnionSet& F) {
    for (const auto& p : s.points())
        if (!F.contains(p)) return false;
    for (const auto& b : s.blocks())
        if (!block_within(b, F)) return false;
    return true;
}

}  // namespace

bool fixes_pointwise(const PLMap& f, const BlockSet& s) {
    return within(s, fixed_set(f));
}

unsigned run_completion_rank(std::vector<Rational> pts, unsigned min_run) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    unsigned rank = 0;
    while (!pts.empty()) {
        ++rank;
        std::unordered_set<Rational> index(pts.begin(), pts.end());
        std::vector<Rational> limits;
        const Rational kWindow(64);
        auto detect = [&](std::size_t i, bool right_side) {
            const Rational& u = pts[i];
            // Nearest gap on the chosen side.
            Rational d;
            if (right_side) {
                if (i + 1 >= pts.size()) return false;
                d = pts[i + 1] - u;
            } else {
                if (i == 0) return false;
                d = u - pts[i - 1];
            }
            Rational bound = d * kWindow;
            // Chains u, u±d, u±dR, u±dR^2, ...: each in-window point is tried
            // as the second-innermost member, which fixes the ratio exactly.
            std::size_t j = right_side ? i + 1 : i - 1;
            while (true) {
                Rational dist = right_side ? pts[j] - u : u - pts[j];
                if (dist > bound) break;
                if (dist > d) {
                    Rational R = dist / d;  // > 1
                    unsigned members = 2;   // the d and dist members
                    Rational probe = dist * R;
                    while (probe <= bound * R) {
                        Rational candidate = right_side ? u + probe : u - probe;
                        if (!index.count(candidate)) break;
                        ++members;
                        probe *= R;
                    }
                    if (members >= min_run) return true;
                }
                if (right_side) {
                    if (++j >= pts.size()) break;
                } else {
                    if (j == 0) break;
                    --j;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (detect(i, true) || detect(i, false)) limits.push_back(pts[i]);
        if (limits.empty()) break;
        pts = std::move(limits);
    }
    return rank;
}

}  // namespace dynideal
