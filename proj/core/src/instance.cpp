#include "dynideal/instance.hpp"

#include "dynideal/errors.hpp"
#include "dynideal/rng.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

namespace {

template <class T, class V>
const T& get_or_throw(const V& v, const char* what) {
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw KindMismatch(std::string("expected ") + what);
}

}  // namespace

const IntervalUnionSet& as_iuset(const Element& e) {
    return get_or_throw<IntervalUnionSet>(e, "IntervalUnionSet");
}
const BlockSet& as_blockset(const Element& e) { return get_or_throw<BlockSet>(e, "BlockSet"); }
const PointSet& as_pointset(const Element& e) { return get_or_throw<PointSet>(e, "PointSet"); }
const GridSet& as_gridset(const Element& e) { return get_or_throw<GridSet>(e, "GridSet"); }
const PLMap& as_plmap(const GroupElem& g) { return get_or_throw<PLMap>(g, "PLMap"); }
const FinitePermutation& as_perm(const GroupElem& g) {
    return get_or_throw<FinitePermutation>(g, "FinitePermutation");
}
const GridElement& as_grid_elem(const GroupElem& g) {
    return get_or_throw<GridElement>(g, "GridElement");
}

bool group_elem_is_identity(const GroupElem& g) {
    return std::visit([](const auto& x) { return x.is_identity(); }, g);
}

GroupElem group_compose(const GroupElem& f, const GroupElem& g) {
    if (f.index() != g.index()) throw KindMismatch("composing different group kinds");
    if (std::holds_alternative<PLMap>(f))
        return as_plmap(f).compose(as_plmap(g));
    if (std::holds_alternative<FinitePermutation>(f))
        return as_perm(f).compose(as_perm(g));
    return as_grid_elem(f).compose(as_grid_elem(g));
}

GroupElem group_inverse(const GroupElem& g) {
    return std::visit([](const auto& x) -> GroupElem { return x.inverse(); }, g);
}

std::string element_str(const Element& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PointSet>) {
                std::ostringstream os;
                os << '{';
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (i) os << ' ';
                    os << x[i];
                }
                os << '}';
                return os.str();
            } else if constexpr (std::is_same_v<T, GridSet>) {
                std::ostringstream os;
                os << '{';
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (i) os << ' ';
                    os << x[i].col << ':' << x[i].val;
                }
                os << '}';
                return os.str();
            } else {
                return x.str();
            }
        },
        e);
}

std::string group_elem_str(const GroupElem& g) {
    return std::visit([](const auto& x) { return x.str(); }, g);
}

std::string Instance::display_name() const {
    if (params_.empty()) return name_;
    std::ostringstream os;
    os << name_ << '(';
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) os << ',';
        os << params_[i].second;
    }
    os << ')';
    return os.str();
}

namespace {

// ---- shared PL samplers ----

PLMap sample_plmap(Rng& rng, int complexity) {
    int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, complexity)) + 1));
    std::vector<std::pair<Rational, Rational>> anchors;
    Rational x(-6), y(-6);
    for (int i = 0; i < n; ++i) {
        x += rng.rational_in(Rational(1, 4), Rational(3)).abs();
        y += rng.rational_in(Rational(1, 4), Rational(3)).abs();
        anchors.emplace_back(x, y);
    }
    static const int slopes[] = {1, 2, 3};
    Rational sl(slopes[rng.below(3)]), sr(slopes[rng.below(3)]);
    if (rng.coin()) sl = Rational(1) / sl;
    if (rng.coin()) sr = Rational(1) / sr;
    return PLMap::from_anchors(anchors, sl, sr);
}

// Identity on the hull of `lo..hi`, seeded bumps outside of it.
PLMap sample_plmap_fixing_hull(Rng& rng, const Rational& lo, const Rational& hi) {
    std::vector<std::pair<Rational, Rational>> anchors;
    Rational ld = rng.rational_in(Rational(1, 2), Rational(3)).abs();
    Rational l2 = rng.rational_in(Rational(1, 2), Rational(3)).abs();
    anchors.emplace_back(lo - ld - l2, lo - ld - rng.rational_in(Rational(1, 4), l2 + Rational(1, 4)).abs());
    anchors.emplace_back(lo, lo);
    anchors.emplace_back(hi, hi);
    Rational rd = rng.rational_in(Rational(1, 2), Rational(3)).abs();
    Rational r2 = rng.rational_in(Rational(1, 2), Rational(3)).abs();
    anchors.emplace_back(hi + rd + r2, hi + rd + rng.rational_in(Rational(1, 4), r2 + Rational(1, 4)).abs() + r2);
    std::sort(anchors.begin(), anchors.end());
    // Monotonicity can fail for unlucky draws of the first y; fall back.
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
        if (!(anchors[i].first < anchors[i + 1].first &&
              anchors[i].second < anchors[i + 1].second))
            return PLMap();
    return PLMap::from_anchors(anchors);
}

// ---- BoundedQ ----

class BoundedQInstance final : public Instance {
public:
    BoundedQInstance() : Instance("BoundedQ", {}) {}

    bool in_ideal(const Element& s) const override { return as_iuset(s).bounded(); }

    Element act(const GroupElem& g, const Element& s) const override {
        return as_iuset(s).image(as_plmap(g));
    }

    bool in_pstab(const GroupElem& g, const Element& s) const override {
        return fixes_pointwise(as_plmap(g), as_iuset(s));
    }

    Element empty_element() const override { return IntervalUnionSet(); }

    Element unite(const Element& a, const Element& b) const override {
        return as_iuset(a).unite(as_iuset(b));
    }

    GroupElem identity() const override { return PLMap(); }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int n = rng.size_around(std::max(1, size_hint));
        Rational w(4 * (std::max(1, size_hint) + 1));
        std::vector<Interval> comps;
        for (int i = 0; i < n; ++i) {
            Rational a = rng.rational_in(-w, w);
            if (rng.coin()) {
                comps.push_back(Interval::point(a));
            } else {
                Rational b = a + rng.rational_in(Rational(1, 4), Rational(2)).abs();
                comps.push_back(Interval{a, b, rng.coin(), rng.coin()});
            }
        }
        return IntervalUnionSet(std::move(comps));
    }

    GroupElem sample_group(std::uint64_t seed, int complexity_hint) const override {
        Rng rng(seed);
        return sample_plmap(rng, complexity_hint);
    }

    GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                            int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        const auto& f = as_iuset(fixed);
        if (f.empty()) return sample_plmap(rng, 2);
        return sample_plmap_fixing_hull(rng, f.inf(), f.sup());
    }
};

// ---- block-set instances over PL maps ----

class BlockPLInstance : public Instance {
public:
    using Instance::Instance;

    Element act(const GroupElem& g, const Element& s) const override {
        return image_set(as_plmap(g), as_blockset(s));
    }

    bool in_pstab(const GroupElem& g, const Element& s) const override {
        return fixes_pointwise(as_plmap(g), as_blockset(s));
    }

    Element empty_element() const override { return BlockSet(); }

    Element unite(const Element& a, const Element& b) const override {
        return as_blockset(a).unite(as_blockset(b));
    }

    GroupElem identity() const override { return PLMap(); }

    GroupElem sample_group(std::uint64_t seed, int complexity_hint) const override {
        Rng rng(seed);
        return sample_plmap(rng, complexity_hint);
    }

    GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                            int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        const auto& f = as_blockset(fixed);
        if (f.empty()) return sample_plmap(rng, 2);
        // Rational bounds strictly outside the (possibly irrational) hull.
        QuadExt lo_q = f.inf(), hi_q = f.sup();
        Rational lo = lo_q.rat_part() - Rational(2) * lo_q.irr_part().abs() - Rational(1);
        Rational hi = hi_q.rat_part() + Rational(2) * hi_q.irr_part().abs() + Rational(1);
        return sample_plmap_fixing_hull(rng, lo, hi);
    }
};

class WellOrderedQInstance final : public BlockPLInstance {
public:
    WellOrderedQInstance() : BlockPLInstance("WellOrderedQ", {}) {}

    bool in_ideal(const Element& s) const override { return is_well_ordered(as_blockset(s)); }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int n = 1 + rng.size_around(std::max(1, size_hint));
        Rational w(3 * (std::max(1, size_hint) + 1));
        std::vector<Rational> pts;
        std::vector<Block> blocks;
        for (int i = 0; i < n; ++i) {
            Rational a = rng.rational_in(-w, w);
            if (rng.coin()) {
                pts.push_back(a);
            } else {
                Rational span = rng.rational_in(Rational(1, 2), Rational(2)).abs();
                static const std::pair<int, int> ratios[] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}};
                auto [p, q] = ratios[rng.below(4)];
                blocks.push_back(
                    Block::geometric(true, a, a + span, Rational(p, q), rng.coin()));
            }
        }
        return BlockSet(std::move(pts), std::move(blocks));
    }
};

class WellOrderedBoundedBelowQInstance final : public BlockPLInstance {
public:
    WellOrderedBoundedBelowQInstance() : BlockPLInstance("WellOrderedBoundedBelowQ", {}) {}

    bool in_ideal(const Element& s) const override {
        const auto& b = as_blockset(s);
        return is_well_ordered(b) && is_bounded_below_every(b);
    }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int n = 1 + rng.size_around(std::max(1, size_hint));
        Rational w(3 * (std::max(1, size_hint) + 1));
        std::vector<Rational> pts;
        std::vector<Block> blocks;
        for (int i = 0; i < n; ++i) {
            Rational a = rng.rational_in(-w, w);
            if (rng.coin()) {
                pts.push_back(a);
            } else {
                // Ascending to an irrational point a + b*sqrt2, b != 0.
                Rational beta = rng.coin() ? Rational(1, static_cast<int>(rng.below(3)) + 1)
                                           : Rational(-1, static_cast<int>(rng.below(3)) + 1);
                blocks.push_back(
                    Block::pell(true, QuadExt(a, beta), static_cast<unsigned>(rng.below(3))));
            }
        }
        return BlockSet(std::move(pts), std::move(blocks));
    }
};

class CountableClosedQInstance final : public BlockPLInstance {
public:
    CountableClosedQInstance() : BlockPLInstance("CountableClosedQ", {}) {}

    bool in_ideal(const Element& s) const override {
        const auto& b = as_blockset(s);
        if (b.empty()) return true;
        return is_closed(b) && b.inf() >= QuadExt(Rational(0)) &&
               b.sup() <= QuadExt(Rational(1));
    }

    bool in_group(const GroupElem& g) const override {
        const auto& f = as_plmap(g);
        return f.apply(Rational(0)) == Rational(0) && f.apply(Rational(1)) == Rational(1);
    }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int n = 1 + rng.size_around(std::max(1, size_hint));
        std::vector<Rational> pts;
        std::vector<Block> blocks;
        for (int i = 0; i < n; ++i) {
            Rational a = rng.rational_in(Rational(1, 16), Rational(13, 16));
            if (rng.coin()) {
                pts.push_back(a);
                continue;
            }
            Rational span = rng.rational_in(Rational(1, 16), Rational(1, 8)).abs();
            static const std::pair<int, int> ratios[] = {{1, 2}, {1, 3}, {2, 5}};
            auto [p, q] = ratios[rng.below(3)];
            BlockSetPtr pattern;
            if (rng.below(3) == 0) {
                // One nested layer for higher-rank members.
                pattern = std::make_shared<const BlockSet>(BlockSet::single(
                    Block::geometric(true, Rational(0), Rational(1), Rational(1, 2), true)));
            }
            bool asc = rng.coin();
            Rational lim = asc ? a + span : a;
            Rational st = asc ? a : a + span;
            blocks.push_back(Block::geometric(asc, st, lim, Rational(p, q), true, pattern));
        }
        return BlockSet(std::move(pts), std::move(blocks));
    }

    GroupElem sample_group(std::uint64_t seed, int complexity_hint) const override {
        Rng rng(seed);
        int n = 1 + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(std::max(1, complexity_hint)) + 1));
        // Increasing anchors strictly inside (0,1), endpoints pinned.
        std::vector<Rational> xs, ys;
        Rational x(0), y(0);
        for (int i = 0; i < n; ++i) {
            x += rng.rational_in(Rational(1, 16), Rational(1, 4)).abs();
            y += rng.rational_in(Rational(1, 16), Rational(1, 4)).abs();
            if (x >= Rational(15, 16) || y >= Rational(15, 16)) break;
            xs.push_back(x);
            ys.push_back(y);
        }
        std::vector<std::pair<Rational, Rational>> anchors{{Rational(0), Rational(0)}};
        for (std::size_t i = 0; i < xs.size(); ++i) anchors.emplace_back(xs[i], ys[i]);
        anchors.emplace_back(Rational(1), Rational(1));
        return PLMap::from_anchors(anchors);
    }

    GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                            int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        const auto& f = as_blockset(fixed);
        for (int attempt = 0; attempt < 24; ++attempt) {
            Rational p = rng.rational_in(Rational(1, 32), Rational(29, 32));
            Rational q = p + rng.rational_in(Rational(1, 32), Rational(1, 8)).abs();
            if (q >= Rational(1)) continue;
            if (!f.restrict(Interval{p, q, true, true}).empty()) continue;
            Rational w = midpoint(p, q);
            Rational wy = rng.rational_in(p + (q - p) / Rational(8),
                                          q - (q - p) / Rational(8));
            if (!(p < wy && wy < q)) continue;
            return PLMap::from_anchors(
                {{Rational(0), Rational(0)}, {p, p}, {w, wy}, {q, q}, {Rational(1), Rational(1)}});
        }
        return PLMap();
    }
};

// ---- FiniteSym(N, k) ----

class FiniteSymInstance final : public Instance {
public:
    FiniteSymInstance(int n, int k) : Instance("FiniteSym", {{"N", n}, {"k", k}}), n_(n), k_(k) {
        if (n <= 0 || k <= 0) throw ConfigError("FiniteSym: N and k must be positive");
    }

    int ground_size() const { return n_; }
    int threshold() const { return k_; }

    bool in_ideal(const Element& s) const override {
        const auto& ps = as_pointset(s);
        if (!ps.empty() && (ps.front() < 0 || ps.back() >= n_)) return false;
        return static_cast<int>(ps.size()) < k_;
    }

    Element act(const GroupElem& g, const Element& s) const override {
        return as_perm(g).act(as_pointset(s));
    }

    bool in_pstab(const GroupElem& g, const Element& s) const override {
        return as_perm(g).fixes_pointwise(as_pointset(s));
    }

    Element empty_element() const override { return PointSet{}; }

    Element unite(const Element& a, const Element& b) const override {
        return ps_union(as_pointset(a), as_pointset(b));
    }

    GroupElem identity() const override { return FinitePermutation(n_); }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int cap = std::min(k_ - 1, n_);
        int sz = std::min(rng.size_around(std::max(0, size_hint)), cap);
        return rng.sample_subset(n_, sz);
    }

    GroupElem sample_group(std::uint64_t seed, int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        std::vector<int> im(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) im[static_cast<std::size_t>(i)] = i;
        for (int i = n_ - 1; i > 0; --i)
            std::swap(im[static_cast<std::size_t>(i)],
                      im[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        return FinitePermutation(std::move(im));
    }

    GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                            int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        PointSet free = ps_complement(as_pointset(fixed), n_);
        std::vector<int> perm_free = free;
        for (std::size_t i = perm_free.size(); i > 1; --i)
            std::swap(perm_free[i - 1], perm_free[rng.below(i)]);
        std::vector<int> im(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) im[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = 0; i < free.size(); ++i)
            im[static_cast<std::size_t>(free[i])] = perm_free[i];
        return FinitePermutation(std::move(im));
    }

private:
    int n_;
    int k_;
};

// ---- AbelianGrid(m, modulus) ----

class AbelianGridInstance final : public Instance {
public:
    AbelianGridInstance(int m, int modulus)
        : Instance("AbelianGrid", {{"m", m}, {"mod", modulus}}), m_(m), mod_(modulus) {
        if (m <= 0 || modulus <= 0) throw ConfigError("AbelianGrid: bad parameters");
    }

    int columns() const { return m_; }
    int modulus() const { return mod_; }

    bool in_ideal(const Element& s) const override {
        const auto& gs = as_gridset(s);
        for (const auto& c : gs)
            if (c.col < 0 || c.col >= m_ || c.val < 0 || c.val >= mod_) return false;
        return static_cast<int>(gs_columns(gs).size()) < m_;
    }

    Element act(const GroupElem& g, const Element& s) const override {
        return as_grid_elem(g).act(as_gridset(s));
    }

    bool in_pstab(const GroupElem& g, const Element& s) const override {
        return as_grid_elem(g).fixes_pointwise(as_gridset(s));
    }

    Element empty_element() const override { return GridSet{}; }

    Element unite(const Element& a, const Element& b) const override {
        return gs_union(as_gridset(a), as_gridset(b));
    }

    GroupElem identity() const override { return GridElement::identity(m_, mod_); }

    Element sample_ideal(std::uint64_t seed, int size_hint) const override {
        Rng rng(seed);
        int ncols = m_ <= 1 ? 0
                            : 1 + static_cast<int>(rng.below(
                                      static_cast<std::uint64_t>(m_ - 1)));
        auto cols = rng.sample_subset(m_, ncols);
        GridSet out;
        for (int c : cols) {
            int cells = 1 + rng.size_around(std::max(0, size_hint - 1));
            for (int i = 0; i < cells; ++i)
                out.push_back(GridCell{c, static_cast<int>(rng.below(
                                              static_cast<std::uint64_t>(mod_)))});
        }
        return gs_normalize(std::move(out));
    }

    GroupElem sample_group(std::uint64_t seed, int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        std::vector<int> shifts(static_cast<std::size_t>(m_));
        for (auto& s : shifts) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(mod_)));
        return GridElement(std::move(shifts), mod_);
    }

    GroupElem sample_fixing(std::uint64_t seed, const Element& fixed,
                            int complexity_hint) const override {
        (void)complexity_hint;
        Rng rng(seed);
        auto touched = gs_columns(as_gridset(fixed));
        std::vector<int> shifts(static_cast<std::size_t>(m_), 0);
        for (int c = 0; c < m_; ++c)
            if (!std::binary_search(touched.begin(), touched.end(), c))
                shifts[static_cast<std::size_t>(c)] =
                    static_cast<int>(rng.below(static_cast<std::uint64_t>(mod_)));
        return GridElement(std::move(shifts), mod_);
    }

private:
    int m_;
    int mod_;
};

int param_or(const std::vector<std::pair<std::string, int>>& params, const std::string& key,
             int fallback) {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return fallback;
}

}  // namespace

InstancePtr make_instance(const std::string& name,
                          const std::vector<std::pair<std::string, int>>& params) {
    if (name == "BoundedQ") return std::make_shared<BoundedQInstance>();
    if (name == "WellOrderedQ") return std::make_shared<WellOrderedQInstance>();
    if (name == "WellOrderedBoundedBelowQ")
        return std::make_shared<WellOrderedBoundedBelowQInstance>();
    if (name == "CountableClosedQ") return std::make_shared<CountableClosedQInstance>();
    if (name == "FiniteSym")
        return std::make_shared<FiniteSymInstance>(param_or(params, "N", 8),
                                                   param_or(params, "k", 4));
    if (name == "AbelianGrid")
        return std::make_shared<AbelianGridInstance>(param_or(params, "m", 3),
                                                     param_or(params, "mod", 4));
    throw UnknownInstance(name);
}

std::vector<InstancePtr> instance_catalog() {
    return {make_instance("BoundedQ"),         make_instance("WellOrderedQ"),
            make_instance("WellOrderedBoundedBelowQ"), make_instance("CountableClosedQ"),
            make_instance("FiniteSym"),        make_instance("AbelianGrid")};
}

}  // namespace dynideal
