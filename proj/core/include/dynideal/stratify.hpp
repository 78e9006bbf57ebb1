// Stratification witness for the size-threshold ideals: push every b_m into
// one uniform window W of size k_n, so the union of arbitrarily many pushed
// sets stays below the next threshold. The single window is the finite
// certificate standing in for the countable quantifier.

#pragma once

#include "dynideal/perm.hpp"

#include <vector>

namespace dynideal {

struct StratifiedWitness {
    std::vector<FinitePermutation> maps;  // gamma_m, fix a pointwise
    PointSet window;                      // W, disjoint from a, |W| = k_n
    PointSet union_set;                   // a united with all images
};

// Requires |a| < k_n, every |b_m| < k_n, k_next >= 2*k_n, and ground room
// n >= |a| + k_n (InsufficientSpace otherwise; threshold violations raise
// ConfigError). Postcondition: every image of b_m \ a lands inside W, hence
// |union| < k_next uniformly in the number of sets.
StratifiedWitness stratified_witness(const PointSet& a, const std::vector<PointSet>& bs,
                                     int ground_n, int k_n, int k_next);

}  // namespace dynideal
