#include "dynideal/factor.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <set>

namespace dynideal {

namespace {

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

}  // namespace

std::vector<FinitePermutation> normal_closure(const std::vector<FinitePermutation>& core_gens,
                                              const std::vector<FinitePermutation>& ambient_gens,
                                              int n) {
    if (n > kMaxExactDegree)
        throw BudgetExceeded("normal_closure: degree beyond the exact-enumeration budget");
    const std::size_t cap = factorial(n);
    std::vector<FinitePermutation> amb = generate_subgroup(ambient_gens, n, cap);
    std::set<FinitePermutation> seeds;
    for (const auto& g : amb)
        for (const auto& c : core_gens) seeds.insert(g.compose(c).compose(g.inverse()));
    // The seed set is conjugation-closed, so plain subgroup generation yields
    // exactly the normal closure inside the ambient group.
    return generate_subgroup({seeds.begin(), seeds.end()}, n, cap);
}

bool simplicity_check(int n, const PointSet& a, const PointSet& b) {
    if (n > kMaxExactDegree)
        throw BudgetExceeded("simplicity_check: degree beyond the exact-enumeration budget");
    if (!ps_subset(a, b)) throw ConfigError("simplicity_check: a must be a subset of b");
    auto core = symmetric_group_on(ps_complement(b, n), n);
    auto ambient = symmetric_group_on(ps_complement(a, n), n);
    auto closure = normal_closure(core, ambient, n);
    auto full = generate_subgroup(ambient, n, factorial(n));
    return closure == full;
}

FinitePermutation FactorizationWitness::recompose() const {
    FinitePermutation acc(target.degree());
    for (const auto& f : factors) {
        FinitePermutation conj = f.conjugator.compose(f.core).compose(f.conjugator.inverse());
        acc = acc.compose(conj);
    }
    return acc;
}

bool FactorizationWitness::verify() const {
    if (!(recompose() == target)) return false;
    for (const auto& f : factors) {
        if (!f.core.fixes_pointwise(big)) return false;
        if (!f.conjugator.fixes_pointwise(base)) return false;
    }
    if (!factors.empty() && !factors.back().core.fixes_pointwise(closure)) return false;
    return true;
}

FactorizationWitness conjugate_factorization(const FinitePermutation& gamma, const PointSet& a,
                                             const PointSet& b, int n) {
    if (!ps_subset(a, b)) throw ConfigError("conjugate_factorization: need a inside b");
    if (!gamma.fixes_pointwise(a))
        throw ConfigError("conjugate_factorization: gamma must fix a pointwise");

    FactorizationWitness w;
    w.target = gamma;
    w.base = a;
    w.big = b;
    if (gamma.is_identity()) {
        w.closure = b;
        return w;
    }

    // c: the gamma-closure of b (orbits of its points under gamma).
    PointSet c = b;
    while (true) {
        PointSet grown = ps_union(c, gamma.act(c));
        grown = ps_union(grown, gamma.inverse().act(c));
        if (grown == c) break;
        c = std::move(grown);
    }
    PointSet moved_part = ps_difference(b, a);
    PointSet outside = ps_difference(ps_complement(c, n), moved_part);
    if (outside.size() < moved_part.size())
        throw InsufficientSpace("conjugate_factorization: no room for a disjoint copy of b");

    // delta: fixes a, throws b \ a clear off the closure c.
    std::vector<std::pair<int, int>> delta_partial;
    for (int x : a) delta_partial.emplace_back(x, x);
    for (std::size_t i = 0; i < moved_part.size(); ++i) {
        delta_partial.emplace_back(moved_part[i], outside[i]);
        delta_partial.emplace_back(outside[i], moved_part[i]);
    }
    FinitePermutation delta = complete_permutation(delta_partial, n);
    PointSet delta_b = delta.act(b);

    // alpha: gamma on c, identity on delta.b, anything elsewhere.
    std::vector<std::pair<int, int>> alpha_partial;
    for (int x : c) alpha_partial.emplace_back(x, gamma.apply(x));
    for (int x : ps_difference(delta_b, c)) alpha_partial.emplace_back(x, x);
    FinitePermutation alpha = complete_permutation(alpha_partial, n);

    FinitePermutation k1 = delta.inverse().compose(alpha).compose(delta);
    FinitePermutation k2 = alpha.inverse().compose(gamma);
    w.factors.push_back({delta, k1});
    w.factors.push_back({FinitePermutation(n), k2});
    w.closure = c;
    if (!w.verify())
        throw ConfigError("conjugate_factorization: witness failed self-verification");
    return w;
}

}  // namespace dynideal
