#include "dynideal/stratify.hpp"

#include "dynideal/errors.hpp"

namespace dynideal {

StratifiedWitness stratified_witness(const PointSet& a, const std::vector<PointSet>& bs,
                                     int ground_n, int k_n, int k_next) {
    if (k_next < 2 * k_n) throw ConfigError("stratified_witness: need k_next >= 2*k_n");
    if (static_cast<int>(a.size()) >= k_n)
        throw NotInIdeal("stratified_witness: base set too large for the layer");
    for (const auto& b : bs)
        if (static_cast<int>(b.size()) >= k_n)
            throw NotInIdeal("stratified_witness: a b_m is too large for the layer");
    if (ground_n < static_cast<int>(a.size()) + k_n)
        throw InsufficientSpace("stratified_witness: ground set cannot host the window");

    StratifiedWitness w;
    for (int i = 0; i < ground_n && static_cast<int>(w.window.size()) < k_n; ++i)
        if (!ps_contains(a, i)) w.window.push_back(i);

    PointSet acc = a;
    for (const auto& b : bs) {
        PointSet stray = ps_difference(ps_difference(b, a), w.window);
        PointSet slots = ps_difference(w.window, b);
        if (stray.size() > slots.size())
            throw InsufficientSpace("stratified_witness: window cannot absorb a b_m");
        std::vector<std::pair<int, int>> partial;
        for (int x : a) partial.emplace_back(x, x);
        for (int x : ps_intersect(b, w.window)) partial.emplace_back(x, x);
        for (std::size_t i = 0; i < stray.size(); ++i) partial.emplace_back(stray[i], slots[i]);
        FinitePermutation gamma = complete_permutation(partial, ground_n);
        if (!gamma.fixes_pointwise(a))
            throw ConfigError("stratified_witness: map fails to fix the base");
        PointSet image = gamma.act(b);
        if (!ps_subset(ps_difference(image, a), w.window))
            throw ConfigError("stratified_witness: image escaped the window");
        acc = ps_union(acc, image);
        w.maps.push_back(std::move(gamma));
    }
    w.union_set = std::move(acc);
    if (static_cast<int>(w.union_set.size()) >= k_next)
        throw ConfigError("stratified_witness: union escaped the next layer");
    return w;
}

}  // namespace dynideal
