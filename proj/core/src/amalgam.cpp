#include "dynideal/amalgam.hpp"

#include "dynideal/errors.hpp"
#include "dynideal/rng.hpp"

#include <algorithm>
#include <sstream>

namespace dynideal {

const std::vector<Rational>& distance_palette() {
    static const std::vector<Rational> palette{Rational(1), Rational(2), Rational(3)};
    return palette;
}

namespace {

std::vector<int> common_labels(const FinStructure& a, const FinStructure& b) {
    std::vector<int> out;
    std::set_intersection(a.universe().begin(), a.universe().end(), b.universe().begin(),
                          b.universe().end(), std::back_inserter(out));
    return out;
}

void require_position(const FinStructure& a, const FinStructure& b) {
    if (a.signature() != b.signature())
        throw KindMismatch("amalgamate: mixed signatures");
    std::string why;
    if (!a.check_axioms(&why)) throw AxiomViolation("left input: " + why);
    if (!b.check_axioms(&why)) throw AxiomViolation("right input: " + why);
    auto common = common_labels(a, b);
    if (!(a.induced(common) == b.induced(common)))
        throw AxiomViolation("amalgamate: inputs disagree on their common part");
}

AmalgamResult amalgamate_ultrametric(const FinStructure& a, const FinStructure& b) {
    auto common = common_labels(a, b);
    std::vector<int> universe;
    std::set_union(a.universe().begin(), a.universe().end(), b.universe().begin(),
                   b.universe().end(), std::back_inserter(universe));
    std::map<std::pair<int, int>, Rational> dist;
    auto put = [&](int x, int y, const Rational& d) {
        dist.emplace(std::make_pair(std::min(x, y), std::max(x, y)), d);
    };
    for (int x : a.universe())
        for (int y : a.universe())
            if (x < y) put(x, y, a.dist(x, y));
    for (int x : b.universe())
        for (int y : b.universe())
            if (x < y) put(x, y, b.dist(x, y));
    std::vector<int> only_a, only_b;
    std::set_difference(a.universe().begin(), a.universe().end(), common.begin(), common.end(),
                        std::back_inserter(only_a));
    std::set_difference(b.universe().begin(), b.universe().end(), common.begin(), common.end(),
                        std::back_inserter(only_b));
    for (int x : only_a)
        for (int y : only_b) {
            Rational value;
            bool forced = false;
            std::optional<Rational> common_value;
            for (int z : common) {
                const Rational& dx = a.dist(x, z);
                const Rational& dy = b.dist(z, y);
                if (!(dx == dy)) {
                    value = std::max(dx, dy);
                    forced = true;
                    break;
                }
                if (!common_value || dx < *common_value) common_value = dx;
            }
            if (!forced) value = common_value ? *common_value : distance_palette().back();
            put(x, y, value);
        }
    AmalgamResult out;
    out.amalgam = FinStructure::ultrametric_space(universe, std::move(dist));
    for (int x : a.universe()) out.embed_a.emplace(x, x);
    for (int y : b.universe()) out.embed_b.emplace(y, y);
    std::string why;
    if (!out.amalgam.check_axioms(&why))
        throw AxiomViolation("ultrametric amalgam broke its axioms: " + why);
    return out;
}

AmalgamResult amalgamate_vector_space(const FinStructure& a, const FinStructure& b) {
    if (a.field_order() != b.field_order())
        throw KindMismatch("amalgamate: different field orders");
    auto common = common_labels(a, b);
    if (!std::binary_search(common.begin(), common.end(), a.zero()) || a.zero() != b.zero())
        throw AxiomViolation("amalgamate: common part must be a shared subspace");
    // The common part must be add-closed in both (checked by induced()).
    (void)a.induced(common);
    (void)b.induced(common);

    auto neg = [](const FinStructure& s, int x) {
        for (int y : s.universe())
            if (s.add(x, y) == s.zero()) return y;
        throw AxiomViolation("no inverse in a vector-space input");
    };
    auto in_common = [&](int v) { return std::binary_search(common.begin(), common.end(), v); };

    // Pushout classes of A x B under (x,y) ~ (x',y') iff x - x' = y' - y in S.
    std::vector<std::pair<int, int>> pairs;
    for (int x : a.universe())
        for (int y : b.universe()) pairs.emplace_back(x, y);
    auto related = [&](const std::pair<int, int>& p, const std::pair<int, int>& q) {
        int dx = a.add(p.first, neg(a, q.first));
        int dy = b.add(q.second, neg(b, p.second));
        return in_common(dx) && in_common(dy) && dx == dy;
    };
    std::map<std::pair<int, int>, int> cls;  // pair -> class index
    std::vector<std::pair<int, int>> reps;
    for (const auto& p : pairs) {
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (related(p, reps[c])) {
                cls[p] = static_cast<int>(c);
                placed = true;
                break;
            }
        if (!placed) {
            cls[p] = static_cast<int>(reps.size());
            reps.push_back(p);
        }
    }

    // Labels: embedded points keep their names, fresh classes get new ones.
    int next_label = 0;
    for (int x : a.universe()) next_label = std::max(next_label, x + 1);
    for (int y : b.universe()) next_label = std::max(next_label, y + 1);
    std::vector<int> class_label(reps.size(), -1);
    for (int x : a.universe()) class_label[static_cast<std::size_t>(cls[{x, b.zero()}])] = x;
    for (int y : b.universe()) {
        int c = cls[{a.zero(), y}];
        if (class_label[static_cast<std::size_t>(c)] == -1)
            class_label[static_cast<std::size_t>(c)] = y;
        else if (class_label[static_cast<std::size_t>(c)] != y && !in_common(y))
            throw AxiomViolation("pushout identified points outside the common part");
    }
    for (auto& l : class_label)
        if (l == -1) l = next_label++;

    std::vector<int> universe(class_label.begin(), class_label.end());
    std::map<std::pair<int, int>, int> add;
    for (std::size_t c1 = 0; c1 < reps.size(); ++c1)
        for (std::size_t c2 = 0; c2 < reps.size(); ++c2) {
            std::pair<int, int> sum{a.add(reps[c1].first, reps[c2].first),
                                    b.add(reps[c1].second, reps[c2].second)};
            add.emplace(std::make_pair(class_label[c1], class_label[c2]),
                        class_label[static_cast<std::size_t>(cls[sum])]);
        }
    AmalgamResult out;
    out.amalgam = FinStructure::vector_space(a.field_order(), universe,
                                             class_label[static_cast<std::size_t>(
                                                 cls[{a.zero(), b.zero()}])],
                                             std::move(add));
    for (int x : a.universe())
        out.embed_a.emplace(x, class_label[static_cast<std::size_t>(cls[{x, b.zero()}])]);
    for (int y : b.universe())
        out.embed_b.emplace(y, class_label[static_cast<std::size_t>(cls[{a.zero(), y}])]);
    std::string why;
    if (!out.amalgam.check_axioms(&why))
        throw AxiomViolation("vector-space amalgam broke its axioms: " + why);
    return out;
}

}  // namespace

AmalgamResult amalgamate(const FinStructure& a, const FinStructure& b) {
    require_position(a, b);
    switch (a.signature()) {
        case Signature::pure_set: {
            std::vector<int> universe;
            std::set_union(a.universe().begin(), a.universe().end(), b.universe().begin(),
                           b.universe().end(), std::back_inserter(universe));
            AmalgamResult out;
            out.amalgam = FinStructure::pure(universe);
            for (int x : a.universe()) out.embed_a.emplace(x, x);
            for (int y : b.universe()) out.embed_b.emplace(y, y);
            return out;
        }
        case Signature::ultrametric:
            return amalgamate_ultrametric(a, b);
        case Signature::vector_space:
            return amalgamate_vector_space(a, b);
        case Signature::quad_selector:
            throw NotAmalgamable("the quadruple-selector class has no canonical operator");
    }
    throw KindMismatch("amalgamate: unknown signature");
}

bool check_invariance(const FinStructure& a, const FinStructure& b,
                      const std::map<int, int>& phi, const std::map<int, int>& psi) {
    auto common = common_labels(a, b);
    for (int z : common)
        if (phi.at(z) != psi.at(z))
            throw ConfigError("check_invariance: maps disagree on the common part");
    FinStructure a2 = a.relabel(phi);
    FinStructure b2 = b.relabel(psi);
    auto common2 = common_labels(a2, b2);
    std::vector<int> expected;
    for (int z : common) expected.push_back(phi.at(z));
    std::sort(expected.begin(), expected.end());
    if (common2 != expected)
        throw ConfigError("check_invariance: images collide outside the common part");

    AmalgamResult c1 = amalgamate(a, b);
    AmalgamResult c2 = amalgamate(a2, b2);
    std::map<int, int> pins;
    for (int x : a.universe()) pins[c1.embed_a.at(x)] = c2.embed_a.at(phi.at(x));
    for (int y : b.universe()) pins[c1.embed_b.at(y)] = c2.embed_b.at(psi.at(y));
    return c1.amalgam.find_isomorphism(c2.amalgam, pins).has_value();
}

bool check_heredity(const FinStructure& a_sub, const FinStructure& a, const FinStructure& b) {
    if (!(a.induced(a_sub.universe()) == a_sub))
        throw ConfigError("check_heredity: left argument is not induced from A");
    auto common = common_labels(a, b);
    for (int z : common)
        if (!a_sub.has(z))
            throw ConfigError("check_heredity: substructure must contain the common part");

    AmalgamResult small = amalgamate(a_sub, b);
    AmalgamResult big = amalgamate(a, b);
    std::vector<int> seed;
    for (int x : a_sub.universe()) seed.push_back(big.embed_a.at(x));
    for (int y : b.universe()) seed.push_back(big.embed_b.at(y));
    std::vector<int> closed = big.amalgam.algebraic_closure(seed);
    FinStructure target = big.amalgam.induced(closed);

    std::map<int, int> pins;
    for (int x : a_sub.universe()) pins[small.embed_a.at(x)] = big.embed_a.at(x);
    for (int y : b.universe()) pins[small.embed_b.at(y)] = big.embed_b.at(y);
    return small.amalgam.find_isomorphism(target, pins).has_value();
}

ImpossibilityRecord no_canonical_amalgam_search(int size_a, int size_b, Signature sig) {
    ImpossibilityRecord record;
    if (sig == Signature::pure_set || size_a + size_b < 4) {
        record.possible = true;
        return record;
    }
    if (sig != Signature::quad_selector || size_a + size_b > 4)
        throw ConfigError("no_canonical_amalgam_search: supported shapes are the "
                          "quad-selector candidates on at most four points");

    // Universe {0..size_a-1} + {size_a..}; one quadruple, six candidate pairs.
    std::vector<int> universe;
    for (int i = 0; i < size_a + size_b; ++i) universe.push_back(i);
    std::vector<std::pair<int, int>> values;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) values.emplace_back(p, q);

    record.possible = false;
    for (auto [p, q] : values) {
        FinStructure cand = FinStructure::quad_selector(
            universe, {{std::vector<int>{0, 1, 2, 3}, std::make_pair(p, q)}});
        bool violated = false;
        // phi ranges over permutations of A (pure automorphisms), psi = id.
        std::vector<int> perm;
        for (int i = 0; i < size_a; ++i) perm.push_back(i);
        do {
            std::map<int, int> f;
            for (int i = 0; i < size_a; ++i) f[i] = perm[static_cast<std::size_t>(i)];
            for (int i = size_a; i < size_a + size_b; ++i) f[i] = i;
            if (!cand.is_embedding(f, cand)) {
                std::ostringstream table, phi;
                table << "quad {0,1,2,3} -> {" << p << "," << q << "}";
                phi << "phi = (";
                for (int i = 0; i < size_a; ++i) phi << ' ' << perm[static_cast<std::size_t>(i)];
                phi << " ), psi = id";
                record.cases.push_back(ImpossibilityCase{table.str(), phi.str()});
                violated = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!violated) {
            record.possible = true;  // some candidate table survived
            record.cases.clear();
            return record;
        }
    }
    return record;
}

namespace {

FinStructure empty_structure(Signature sig) {
    switch (sig) {
        case Signature::pure_set: return FinStructure::pure({});
        case Signature::ultrametric: return FinStructure::ultrametric_space({}, {});
        case Signature::vector_space: return FinStructure::cube_space(2, 0);
        case Signature::quad_selector: return FinStructure::quad_selector({}, {});
    }
    throw ConfigError("empty_structure: unknown signature");
}

int fresh_label(const FinStructure& m) {
    int next = 0;
    for (int x : m.universe()) next = std::max(next, x + 1);
    return next;
}

FinStructure sample_extension(const FinStructure& m, Rng& rng) {
    switch (m.signature()) {
        case Signature::pure_set:
            return FinStructure::pure({fresh_label(m)});
        case Signature::ultrametric: {
            // A fresh point over a small sampled base.
            std::vector<int> base;
            for (int x : m.universe())
                if (rng.below(3) == 0 && base.size() < 3) base.push_back(x);
            int fresh = fresh_label(m);
            const auto& palette = distance_palette();
            for (int attempt = 0; attempt < 24; ++attempt) {
                std::map<std::pair<int, int>, Rational> dist;
                for (std::size_t i = 0; i < base.size(); ++i)
                    for (std::size_t j = i + 1; j < base.size(); ++j)
                        dist.emplace(std::make_pair(std::min(base[i], base[j]),
                                                    std::max(base[i], base[j])),
                                     m.dist(base[i], base[j]));
                for (int z : base)
                    dist.emplace(std::make_pair(std::min(z, fresh), std::max(z, fresh)),
                                 palette[rng.below(palette.size())]);
                std::vector<int> labels = base;
                labels.push_back(fresh);
                FinStructure ext = FinStructure::ultrametric_space(labels, std::move(dist));
                if (ext.check_axioms()) return ext;
            }
            // The constant maximal distance always satisfies the inequality.
            std::map<std::pair<int, int>, Rational> dist;
            for (std::size_t i = 0; i < base.size(); ++i)
                for (std::size_t j = i + 1; j < base.size(); ++j)
                    dist.emplace(std::make_pair(std::min(base[i], base[j]),
                                                std::max(base[i], base[j])),
                                 m.dist(base[i], base[j]));
            for (int z : base)
                dist.emplace(std::make_pair(std::min(z, fresh), std::max(z, fresh)),
                             palette.back());
            std::vector<int> labels = base;
            labels.push_back(fresh);
            return FinStructure::ultrametric_space(labels, std::move(dist));
        }
        case Signature::vector_space: {
            // The common subspace is a sampled span; the extension adds one
            // fresh dimension over it.
            std::vector<int> gen;
            for (int x : m.universe())
                if (rng.below(4) == 0 && gen.size() < 2) gen.push_back(x);
            std::vector<int> sub = m.algebraic_closure(gen);
            FinStructure s = m.induced(sub);
            int q = m.field_order();
            int fresh = fresh_label(m);
            // Labels: coset c*v + s gets label (c-1)*|sub| offset past fresh.
            std::map<std::pair<int, int>, int> table;
            std::vector<int> labels = sub;
            auto coset_label = [&](int c, std::size_t idx) {
                return fresh + (c - 1) * static_cast<int>(sub.size()) +
                       static_cast<int>(idx);
            };
            for (int c = 1; c < q; ++c)
                for (std::size_t i = 0; i < sub.size(); ++i) labels.push_back(coset_label(c, i));
            auto index_of = [&](int label) {
                return static_cast<std::size_t>(
                    std::lower_bound(sub.begin(), sub.end(), label) - sub.begin());
            };
            auto element = [&](int c, int s_label) {
                return c == 0 ? s_label : coset_label(c, index_of(s_label));
            };
            for (int c1 = 0; c1 < q; ++c1)
                for (int c2 = 0; c2 < q; ++c2)
                    for (int s1 : sub)
                        for (int s2 : sub)
                            table.emplace(std::make_pair(element(c1, s1), element(c2, s2)),
                                          element((c1 + c2) % q, s.add(s1, s2)));
            return FinStructure::vector_space(q, labels, s.zero(), std::move(table));
        }
        case Signature::quad_selector:
            throw NotAmalgamable("no canonical chain for the quad-selector class");
    }
    throw ConfigError("sample_extension: unknown signature");
}

}  // namespace

ChainReport fraisse_chain(Signature sig, int steps, std::uint64_t seed) {
    Rng rng(seed);
    ChainReport report;
    FinStructure m = empty_structure(sig);
    report.stages.push_back(m);
    for (int i = 0; i < steps; ++i) {
        FinStructure ext = sample_extension(m, rng);
        m = amalgamate(m, ext).amalgam;
        report.stages.push_back(m);
    }

    // Extension-property score over substructures of size <= 3.
    const auto& u = m.universe();
    std::vector<std::vector<int>> subs{{}};
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i; j < u.size(); ++j)
            for (std::size_t k = j; k < u.size(); ++k) {
                std::vector<int> s{u[i]};
                if (j > i) s.push_back(u[j]);
                if (k > j) s.push_back(u[k]);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                subs.push_back(std::move(s));
            }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());

    for (const auto& s : subs) {
        if (sig == Signature::pure_set) {
            ++report.extension_total;
            if (u.size() > s.size()) ++report.extension_realized;
        } else if (sig == Signature::vector_space) {
            // Only subspaces pose extension problems.
            if (m.algebraic_closure(s) != s && !s.empty()) continue;
            std::vector<int> closed = s.empty() ? std::vector<int>{m.zero()} : s;
            if (m.algebraic_closure(closed) != closed) continue;
            ++report.extension_total;
            if (u.size() > closed.size()) ++report.extension_realized;
        } else {
            // Every palette-valid distance vector over s.
            const auto& palette = distance_palette();
            std::vector<std::size_t> pick(s.size(), 0);
            while (true) {
                std::map<std::pair<int, int>, Rational> dist;
                int fresh = fresh_label(m);
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        dist.emplace(std::make_pair(s[i], s[j]), m.dist(s[i], s[j]));
                for (std::size_t i = 0; i < s.size(); ++i)
                    dist.emplace(std::make_pair(std::min(s[i], fresh), std::max(s[i], fresh)),
                                 palette[pick[i]]);
                std::vector<int> labels = s;
                labels.push_back(fresh);
                FinStructure problem = FinStructure::ultrametric_space(labels, std::move(dist));
                if (problem.check_axioms()) {
                    ++report.extension_total;
                    bool realized = false;
                    for (int y : u) {
                        if (std::binary_search(s.begin(), s.end(), y)) continue;
                        bool match = true;
                        for (std::size_t i = 0; i < s.size(); ++i)
                            if (!(m.dist(y, s[i]) == palette[pick[i]])) { match = false; break; }
                        if (match) { realized = true; break; }
                    }
                    if (realized) ++report.extension_realized;
                }
                // Advance the odometer.
                std::size_t d = 0;
                while (d < pick.size() && ++pick[d] == palette.size()) pick[d++] = 0;
                if (d == pick.size()) break;
            }
        }
    }
    return report;
}

}  // namespace dynideal
