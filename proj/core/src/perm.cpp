#include "dynideal/perm.hpp"

#include "dynideal/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dynideal {

PointSet ps_union(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet ps_difference(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet ps_intersect(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool ps_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool ps_contains(const PointSet& a, int x) {
    return std::binary_search(a.begin(), a.end(), x);
}

PointSet ps_complement(const PointSet& a, int n) {
    PointSet out;
    for (int i = 0; i < n; ++i)
        if (!ps_contains(a, i)) out.push_back(i);
    return out;
}

FinitePermutation::FinitePermutation(int n) : images_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i;
}

FinitePermutation::FinitePermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw ConfigError("FinitePermutation: not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

FinitePermutation FinitePermutation::transposition(int n, int a, int b) {
    FinitePermutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
}

FinitePermutation FinitePermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    FinitePermutation out;
    out.images_ = std::move(inv);
    return out;
}

FinitePermutation FinitePermutation::compose(const FinitePermutation& g) const {
    if (degree() != g.degree()) throw KindMismatch("permutation degrees differ");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = images_[static_cast<std::size_t>(g.images_[i])];
    FinitePermutation r;
    r.images_ = std::move(out);
    return r;
}

bool FinitePermutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

PointSet FinitePermutation::act(const PointSet& s) const {
    PointSet out;
    out.reserve(s.size());
    for (int x : s) out.push_back(apply(x));
    std::sort(out.begin(), out.end());
    return out;
}

bool FinitePermutation::fixes_pointwise(const PointSet& s) const {
    for (int x : s)
        if (apply(x) != x) return false;
    return true;
}

std::string FinitePermutation::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ' ';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

std::vector<FinitePermutation> generate_subgroup(const std::vector<FinitePermutation>& gens,
                                                 int n, std::size_t max_order) {
    std::set<FinitePermutation> seen;
    std::vector<FinitePermutation> frontier{FinitePermutation(n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<FinitePermutation> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                FinitePermutation prod = g.compose(h);
                if (seen.insert(prod).second) {
                    if (seen.size() > max_order)
                        throw BudgetExceeded("subgroup enumeration exceeds " +
                                             std::to_string(max_order));
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<FinitePermutation> symmetric_group_on(const PointSet& support, int n) {
    std::vector<FinitePermutation> gens;
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        gens.push_back(FinitePermutation::transposition(n, support[i], support[i + 1]));
    return gens;
}

FinitePermutation complete_permutation(const std::vector<std::pair<int, int>>& partial, int n) {
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (auto [from, to] : partial) {
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw ConfigError("complete_permutation: point out of range");
        if (images[static_cast<std::size_t>(from)] != -1 || used[static_cast<std::size_t>(to)])
            throw ConfigError("complete_permutation: not a partial injection");
        images[static_cast<std::size_t>(from)] = to;
        used[static_cast<std::size_t>(to)] = true;
    }
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (images[static_cast<std::size_t>(i)] != -1) continue;
        while (used[static_cast<std::size_t>(next)]) ++next;
        images[static_cast<std::size_t>(i)] = next;
        used[static_cast<std::size_t>(next)] = true;
    }
    return FinitePermutation(std::move(images));
}

}  // namespace dynideal
