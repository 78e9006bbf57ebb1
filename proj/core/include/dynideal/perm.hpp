// Finite permutations of {0, ..., N-1} and small-group enumeration.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dynideal {

// Sorted, duplicate-free subsets of the ground set.
using PointSet = std::vector<int>;

PointSet ps_union(const PointSet& a, const PointSet& b);
PointSet ps_difference(const PointSet& a, const PointSet& b);
PointSet ps_intersect(const PointSet& a, const PointSet& b);
bool ps_subset(const PointSet& a, const PointSet& b);
bool ps_contains(const PointSet& a, int x);
PointSet ps_complement(const PointSet& a, int n);

class FinitePermutation {
public:
    FinitePermutation() = default;
    explicit FinitePermutation(int n);               // identity
    explicit FinitePermutation(std::vector<int> images);

    static FinitePermutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[static_cast<std::size_t>(x)]; }
    int operator()(int x) const { return apply(x); }
    const std::vector<int>& images() const { return images_; }

    FinitePermutation inverse() const;
    // (f.compose(g))(x) = f(g(x)).
    FinitePermutation compose(const FinitePermutation& g) const;

    bool is_identity() const;
    PointSet act(const PointSet& s) const;
    bool fixes_pointwise(const PointSet& s) const;

    friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;
    friend bool operator<(const FinitePermutation& a, const FinitePermutation& b) {
        return a.images_ < b.images_;
    }

    std::string str() const;

private:
    std::vector<int> images_;
};

// The whole subgroup generated by `gens` inside Sym(n), as a sorted vector.
// Guarded: throws BudgetExceeded past `max_order` elements.
std::vector<FinitePermutation> generate_subgroup(const std::vector<FinitePermutation>& gens,
                                                 int n, std::size_t max_order);

// Adjacent transpositions of `support`: a generating set of the symmetric
// group on exactly those points (empty for |support| < 2).
std::vector<FinitePermutation> symmetric_group_on(const PointSet& support, int n);

// Fill a partial injection into a full permutation of {0..n-1}; unmapped
// points go to unused targets in increasing order (deterministic).
FinitePermutation complete_permutation(const std::vector<std::pair<int, int>>& partial, int n);

}  // namespace dynideal
