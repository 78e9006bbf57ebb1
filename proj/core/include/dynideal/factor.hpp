// Normal closures in small symmetric groups, the simplicity test, and the
// explicit two-factor conjugate factorization behind it.

#pragma once

#include "dynideal/perm.hpp"

#include <cstddef>
#include <vector>

namespace dynideal {

// Enumeration budget: 9! elements. Beyond that the operations refuse rather
// than approximate.
inline constexpr int kMaxExactDegree = 9;

// Smallest subgroup of <ambient> containing <core> and closed under
// conjugation by the ambient generators, as an explicit sorted element set.
// Exhaustive; throws BudgetExceeded for n > kMaxExactDegree.
std::vector<FinitePermutation> normal_closure(const std::vector<FinitePermutation>& core_gens,
                                              const std::vector<FinitePermutation>& ambient_gens,
                                              int n);

// The only normal subgroup of pstab(a) containing pstab(b) is pstab(a)
// itself, checked by full enumeration. Requires a inside b inside {0..n-1}.
bool simplicity_check(int n, const PointSet& a, const PointSet& b);

// gamma expressed as (delta k1 delta^-1) k2 with k1, k2 fixing b pointwise
// and delta fixing a pointwise; k2 even fixes the gamma-closure of b.
struct FactorizationWitness {
    FinitePermutation target;
    struct Factor {
        FinitePermutation conjugator;  // fixes a pointwise
        FinitePermutation core;        // fixes b pointwise
    };
    std::vector<Factor> factors;  // recomposition product in listed order
    PointSet base;                // a
    PointSet big;                 // b
    PointSet closure;             // gamma-closure of b (k2 fixes it)

    FinitePermutation recompose() const;
    bool verify() const;  // recomposition and all membership annotations
};

// Requires gamma in pstab(a) and room: n >= |closure| + |b \ a|.
FactorizationWitness conjugate_factorization(const FinitePermutation& gamma, const PointSet& a,
                                             const PointSet& b, int n);

}  // namespace dynideal
