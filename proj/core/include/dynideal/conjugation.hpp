// The conjugation witness behind simplicity of homogeneous-structure ideals:
// a partial isomorphism pi fixing a extends to gamma = delta k delta^{-1}
// where k fixes b pointwise, via a fresh canonical copy f of e = acl(b,c,d)
// over a. Hosts grow on demand by canonical one-point amalgamation when the
// finite structure is not saturated enough.

#pragma once

#include "dynideal/amalgam.hpp"

#include <map>
#include <vector>

namespace dynideal {

struct ConjugationWitness {
    FinStructure host;           // M, possibly grown
    std::vector<int> e_labels;   // acl(b, dom(pi), ran(pi))
    std::vector<int> f_labels;   // the fresh copy, meets e exactly in a
    std::map<int, int> theta;    // e -> f, identity on a
    std::map<int, int> delta;    // automorphism extending theta, fixes a
    std::map<int, int> gamma;    // automorphism extending pi and id_f
    std::map<int, int> inner;    // delta^{-1} gamma delta: fixes e pointwise

    bool verify(const std::vector<int>& a, const std::vector<int>& b,
                const std::map<int, int>& pi) const;
};

// Requires: a and b acl-closed with a inside b; pi a partial isomorphism
// between acl-closed sets containing a, identity on a. Throws HostTooSmall
// when growth is disallowed or the growth budget runs out.
ConjugationWitness conjugation_witness(const FinStructure& m, const std::vector<int>& a,
                                       const std::vector<int>& b, const std::map<int, int>& pi,
                                       bool allow_growth = true, int growth_budget = 64);

}  // namespace dynideal
