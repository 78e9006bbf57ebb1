#include "dynideal/sigma.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <map>

namespace dynideal {

namespace {

void require_plain_wellordered(const BlockSet& s, const char* who) {
    if (!is_well_ordered(s)) throw NotInIdeal(std::string(who) + ": set is not well-ordered");
    for (const auto& b : s.blocks())
        if (b.pattern)
            throw ConfigError(std::string(who) + ": nested patterns are not supported");
}

// Closure points of `a` bracketing x: lo = max closure point <= x (or < x
// when strict_below), hi = min closure point >= x. All blocks ascending.
struct Neighbors {
    std::optional<QuadExt> lo, hi;
};

Neighbors closure_neighbors(const BlockSet& a, const QuadExt& x, bool strict_below) {
    Neighbors out;
    auto offer_lo = [&](const QuadExt& c) {
        bool ok = strict_below ? c < x : c <= x;
        if (ok && (!out.lo || c > *out.lo)) out.lo = c;
    };
    auto offer_hi = [&](const QuadExt& c) {
        if (c >= x && (!out.hi || c < *out.hi)) out.hi = c;
    };
    for (const auto& p : a.points()) {
        offer_lo(QuadExt(p));
        offer_hi(QuadExt(p));
    }
    for (const auto& blk : a.blocks()) {
        offer_lo(blk.limit);
        offer_hi(blk.limit);
        // Scaffold elements matter only when the limit lies strictly above x;
        // otherwise the limit dominates them all. The walk then terminates
        // because the elements climb past x.
        if (blk.limit > x) {
            for (unsigned k = 0;; ++k) {
                QuadExt e{blk.element(k)};
                offer_lo(e);
                offer_hi(e);
                if (e >= x) break;
            }
        }
    }
    return out;
}

struct GapKey {
    std::optional<QuadExt> lo, hi;
    friend bool operator==(const GapKey&, const GapKey&) = default;
};

struct GapMaterial {
    std::vector<Rational> points;
    std::vector<Block> tails;  // rebased blocks living wholly inside the gap
};

struct GapWork {
    GapKey key;
    QuadExt target{Rational(0)};
    bool target_is_gap_end = false;  // ladder climbs to the right end itself
    std::vector<Rational> thresholds;
    std::map<int, GapMaterial> per_n;
};

Rational below_everything(const std::optional<QuadExt>& lo, const QuadExt& cap) {
    if (!lo) return cap.rat_part() - Rational(2) * cap.irr_part().abs() - Rational(1);
    return rational_between(*lo, cap);
}

}  // namespace

static SigmaWitness sigma_build(const BlockSet& a, const std::vector<BlockSet>& bs,
                                bool bounded_below_mode) {
    const char* who =
        bounded_below_mode ? "sigma_witness_bounded_below" : "sigma_witness_wellordered";
    require_plain_wellordered(a, who);
    for (const auto& b : bs) {
        require_plain_wellordered(b, who);
        if (bounded_below_mode) {
            if (!is_bounded_below_every(b) || !is_bounded_below_every(a))
                throw NotInIdeal(std::string(who) +
                                 ": input fails the bounded-below-every-point test");
        }
    }
    for (const auto& b : bs)
        for (const auto& bb : b.blocks())
            for (const auto& ab : a.blocks())
                if (bb.limit == ab.limit)
                    throw ConfigError(std::string(who) +
                                      ": block limit collides with a limit of the base set; "
                                      "not realizable with finitely many linear pieces");

    const int count = static_cast<int>(bs.size());
    std::vector<GapWork> gaps;
    auto gap_for = [&](const GapKey& key) -> GapWork& {
        for (auto& g : gaps)
            if (g.key == key) return g;
        gaps.push_back(GapWork{key, QuadExt(Rational(0)), false, {}, {}});
        return gaps.back();
    };

    // Sort the material of every b_n into gaps of the closure of a.
    std::vector<std::vector<Rational>> fixed_parts(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        const BlockSet& b = bs[static_cast<std::size_t>(n)];
        auto place_point = [&](const Rational& p) {
            Neighbors nb = closure_neighbors(a, QuadExt(p), false);
            if ((nb.lo && *nb.lo == QuadExt(p)) || (nb.hi && *nb.hi == QuadExt(p))) {
                fixed_parts[static_cast<std::size_t>(n)].push_back(p);
                return;
            }
            gap_for(GapKey{nb.lo, nb.hi}).per_n[n].points.push_back(p);
        };
        for (const auto& p : b.points()) place_point(p);
        for (const auto& blk : b.blocks()) {
            Neighbors nb = closure_neighbors(a, blk.limit, true);
            unsigned split = 0;
            if (nb.lo)
                while (QuadExt(blk.element(split)) <= *nb.lo) ++split;
            for (unsigned k = 0; k < split; ++k) place_point(blk.element(k));
            Block tail = blk.is_pell()
                             ? Block::pell(true, blk.limit, blk.pell_index + split, nullptr)
                             : Block::geometric(true, blk.element(split),
                                                blk.limit.as_rational(), blk.ratio,
                                                blk.limit_included, nullptr);
            gap_for(GapKey{nb.lo, nb.hi}).per_n[n].tails.push_back(std::move(tail));
        }
    }

    // Lay the threshold ladder of every relevant gap.
    for (auto& g : gaps) {
        // A rational base point inside the gap, below all material and room
        // for the ladder above it.
        QuadExt cap = g.key.hi ? *g.key.hi : QuadExt(Rational(0));
        Rational base;
        if (g.key.hi)
            base = below_everything(g.key.lo, *g.key.hi);
        else if (g.key.lo)
            base = g.key.lo->rat_part() + Rational(2) * g.key.lo->irr_part().abs() + Rational(1);
        else
            base = Rational(0);

        if (bounded_below_mode) {
            Rational p0 = base;
            Rational q0 = g.key.hi ? rational_between(QuadExt(p0), *g.key.hi)
                                   : p0 + Rational(2);
            Rational beta = (q0 - p0) / Rational(2);
            g.target = QuadExt(p0, beta);  // p0 + beta*sqrt2, inside (p0, q0)
            for (int n = 0; n <= count; ++n)
                g.thresholds.push_back(p0 + beta * pell_lower(static_cast<unsigned>(n)));
        } else if (!g.key.hi) {
            g.target = QuadExt(Rational(0));  // unbounded: ladder climbs linearly
            for (int n = 0; n <= count; ++n) g.thresholds.push_back(base + Rational(n + 1));
        } else if (g.key.hi->is_rational()) {
            g.target = *g.key.hi;
            g.target_is_gap_end = true;
            Rational T = g.key.hi->as_rational();
            for (int n = 0; n <= count; ++n)
                g.thresholds.push_back(T - (T - base) * Rational(1, 2).pow(
                                                            static_cast<unsigned>(n) + 1));
        } else {
            // Irrational right end: climb the Pell ladder of the end itself.
            g.target = *g.key.hi;
            g.target_is_gap_end = true;
            const Rational& beta = g.key.hi->irr_part();
            unsigned j0 = 0;
            auto x_at = [&](unsigned j) {
                Rational u = beta.sign() > 0 ? pell_lower(j) : pell_upper(j);
                return g.key.hi->rat_part() + beta * u;
            };
            while (!(x_at(j0) > base)) ++j0;
            for (int n = 0; n <= count; ++n)
                g.thresholds.push_back(x_at(j0 + static_cast<unsigned>(n)));
        }
    }

    // Assemble gamma_n from per-gap anchor groups.
    SigmaWitness out;
    BlockSet acc = a;
    for (int n = 0; n < count; ++n) {
        std::vector<std::pair<Rational, Rational>> anchors;
        for (auto& g : gaps) {
            auto it = g.per_n.find(n);
            if (it == g.per_n.end()) continue;
            const GapMaterial& mat = it->second;
            // Min and sup of the material inside this gap.
            std::optional<Rational> mn;
            std::optional<QuadExt> sup;
            bool reaches_end = false;
            auto feed = [&](const Rational& lo_el, const QuadExt& s) {
                if (!mn || lo_el < *mn) mn = lo_el;
                if (!sup || s > *sup) sup = s;
            };
            for (const auto& p : mat.points) feed(p, QuadExt(p));
            for (const auto& t : mat.tails) {
                feed(t.start, t.limit);
                if (g.key.hi && t.limit == *g.key.hi) reaches_end = true;
            }
            const Rational& x_n = g.thresholds[static_cast<std::size_t>(n)];
            const Rational& x_next = g.thresholds[static_cast<std::size_t>(n) + 1];
            Rational v = midpoint(x_n, x_next);
            Rational pin_lo_cap = std::min(*mn, g.thresholds.front());
            Rational p = g.key.lo ? rational_between(*g.key.lo, QuadExt(pin_lo_cap))
                                  : pin_lo_cap - Rational(1);
            anchors.emplace_back(p, p);
            anchors.emplace_back(*mn, v);
            if (reaches_end) {
                anchors.emplace_back(g.key.hi->as_rational(), g.key.hi->as_rational());
            } else {
                Rational y = g.key.hi ? rational_between(*sup, *g.key.hi)
                                      : sup->rat_part() +
                                            Rational(2) * sup->irr_part().abs() + Rational(1);
                anchors.emplace_back(y, x_next);
                QuadExt q_from = std::max(QuadExt(y), QuadExt(x_next));
                Rational q = g.key.hi ? rational_between(q_from, *g.key.hi)
                                      : q_from.rat_part() + Rational(1);
                anchors.emplace_back(q, q);
            }
        }
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        PLMap gamma = PLMap::from_anchors(anchors);
        if (!fixes_pointwise(gamma, a))
            throw ConfigError(std::string(who) + ": witness does not fix the base set");
        out.maps.push_back(gamma);
        acc = acc.unite(image_set(gamma, bs[static_cast<std::size_t>(n)]));
    }

    for (auto& g : gaps) {
        GapLadder ladder;
        ladder.lo = g.key.lo;
        ladder.hi = g.key.hi;
        ladder.target = g.target;
        ladder.thresholds = g.thresholds;
        for (const auto& [n, mat] : g.per_n) ladder.used_by.push_back(n);
        out.gaps.push_back(std::move(ladder));
    }
    out.union_set = acc;

    if (!is_well_ordered(out.union_set))
        throw ConfigError(std::string(who) + ": union failed the ideal test");
    if (bounded_below_mode && !is_bounded_below_every(out.union_set))
        throw ConfigError(std::string(who) + ": union fails bounded-below-every-point");
    return out;
}

SigmaWitness sigma_witness_wellordered(const BlockSet& a, const std::vector<BlockSet>& bs) {
    return sigma_build(a, bs, false);
}

SigmaWitness sigma_witness_bounded_below(const BlockSet& a, const std::vector<BlockSet>& bs) {
    return sigma_build(a, bs, true);
}

}  // namespace dynideal
