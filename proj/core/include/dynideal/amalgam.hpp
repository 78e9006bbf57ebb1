// Canonical amalgamation operators and their law checkers.
//
// For structures A, B agreeing on their common labels, the operator returns
// a minimal disjoint amalgam with embeddings that keep original labels:
//   pure sets:      plain union;
//   ultrametric:    cross distance = max(d_A(x,z), d_B(z,y)) over any common
//                   witness z with unequal legs (the isoceles law makes the
//                   value independent of z), else the minimum of the common
//                   values; with no common part, the fixed palette maximum;
//   vector spaces:  the pushout A x B modulo (x,y) ~ (x',y') iff
//                   x - x' = y' - y lies in the common subspace.
// The quad-selector class has no canonical operator; the exhaustive search
// below certifies that with a violating automorphism pair per candidate.

#pragma once

#include "dynideal/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dynideal {

// The distance palette; exhaustive sweeps stay finite because of it.
const std::vector<Rational>& distance_palette();

struct AmalgamResult {
    FinStructure amalgam;
    std::map<int, int> embed_a;
    std::map<int, int> embed_b;
};

// Throws NotAmalgamable for the quad-selector signature, AxiomViolation if
// an input breaks its signature axioms or the two disagree on common labels.
AmalgamResult amalgamate(const FinStructure& a, const FinStructure& b);

// Clause (1): isomorphisms phi: A -> A2, psi: B -> B2 that agree on the
// common part extend to an isomorphism of the amalgams.
bool check_invariance(const FinStructure& a, const FinStructure& b,
                      const std::map<int, int>& phi, const std::map<int, int>& psi);

// Clause (2): for an induced substructure A2 of A containing the common
// part, C(A2, B) is isomorphic over dom(A2) + dom(B) to the algebraic
// closure of dom(A2) + dom(B) inside C(A, B).
bool check_heredity(const FinStructure& a_sub, const FinStructure& a, const FinStructure& b);

struct ImpossibilityCase {
    std::string table;         // the candidate selector on the amalgam
    std::string violating_phi; // an automorphism pair breaking invariance
};

struct ImpossibilityRecord {
    bool possible = false;
    std::vector<ImpossibilityCase> cases;  // one per candidate table when impossible
};

// Exhaustive: for |A|=3, |B|=1 disjoint in the quad-selector class, every
// selector value on the 4-element candidate amalgam is defeated by an
// automorphism pair. Degenerate shapes (no quadruple) and the pure-set
// signature report "possible".
ImpossibilityRecord no_canonical_amalgam_search(int size_a, int size_b, Signature sig);

struct ChainReport {
    std::vector<FinStructure> stages;
    // Realized / total one-point extension problems over substructures of
    // size <= 3 inside the final stage.
    int extension_realized = 0;
    int extension_total = 0;
};

// Iterated canonical amalgamation with seeded small extensions.
ChainReport fraisse_chain(Signature sig, int steps, std::uint64_t seed);

}  // namespace dynideal
