// Witnesses for sigma-completeness of the well-ordered ideals: given a base
// set a and finitely many ideal sets b_n, produce automorphisms gamma_n
// fixing a pointwise so the union a with all gamma_n.b_n stays in the ideal.
//
// Per maximal interval i disjoint from the closure of a ("gap"), a threshold
// ladder x_{i,0} < x_{i,1} < ... is laid out and gamma_n pushes the part of
// b_n inside i above x_{i,n} and below x_{i,n+1}. For the plain well-ordered
// ideal the ladder climbs to the right end of the gap; for the
// bounded-below-every-point ideal it climbs Pell-style to an irrational
// point chosen inside the gap, so the union has no supremum below any
// rational. The finite list stands in for the countable family; what is
// verified exactly is the per-gap ladder invariant driving the limit
// argument.
//
// Supported inputs are plain scaffolds (no nested patterns). An ascending
// block of some b_n sharing its exact limit with an ascending block of a is
// rejected: its elements interleave a cofinally, and a piecewise-linear map
// fixing a pointwise is the identity near that limit, so no finite-piece
// witness exists. Seeded samplers never produce such collisions.

#pragma once

#include "dynideal/blockset.hpp"
#include "dynideal/plmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynideal {

struct GapLadder {
    std::optional<QuadExt> lo, hi;        // gap endpoints (nullopt = infinite)
    QuadExt target;                        // what the ladder climbs to
    std::vector<Rational> thresholds;      // x_{i,0} .. x_{i,count}
    std::vector<int> used_by;              // which b_n placed material here
};

struct SigmaWitness {
    std::vector<PLMap> maps;       // gamma_n, one per input b_n
    std::vector<GapLadder> gaps;   // relevant gaps only
    BlockSet union_set;            // a united with all images
};

// Model of countable choice for the well-ordered ideal. Throws NotInIdeal on
// inputs outside the ideal, ConfigError on nested patterns or interleaving
// limit collisions.
SigmaWitness sigma_witness_wellordered(const BlockSet& a, const std::vector<BlockSet>& bs);

// The bounded-below-every-point refinement; thresholds climb to irrational
// in-gap targets and the union passes all three ideal predicates.
SigmaWitness sigma_witness_bounded_below(const BlockSet& a, const std::vector<BlockSet>& bs);

}  // namespace dynideal
