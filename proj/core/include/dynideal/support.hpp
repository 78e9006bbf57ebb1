// The support calculus: the extended action on hereditarily finite sets,
// pointwise-stabilizer generators, support checks, definable closure, the
// well-orderability search, the choice selector, and the abelian orbit
// machinery. Everything is decided by sweeping finitely many generators;
// that suffices because setwise stabilizers are subgroups.

#pragma once

#include "dynideal/cover.hpp"
#include "dynideal/hfset.hpp"
#include "dynideal/instance.hpp"

#include <optional>
#include <vector>

namespace dynideal {

// Ground size of a finite instance (FiniteSym: N; AbelianGrid: m*modulus).
int ground_size(const Instance& inst);

// The atom relabeling induced by a group element.
std::function<int(int)> atom_action(const Instance& inst, const GroupElem& g);

// Recursive image of A under g.
HfSet act_hf(const Instance& inst, const GroupElem& g, const HfSet& A);

// Generators of pstab(b): adjacent transpositions of the complement
// (FiniteSym) or unit shifts on untouched columns (AbelianGrid). Throws
// UnsupportedInstance for the PL instances, whose pointwise stabilizers are
// not finitely generated.
std::vector<GroupElem> pstab_generators(const Instance& inst, const Element& b);

struct SupportClaim {
    HfSet set;
    Element support;
    bool verified = false;
};

// verified iff every generator of pstab(b) fixes A setwise.
SupportClaim check_support(const Instance& inst, const HfSet& A, const Element& b);

// Re-check the claim transported along gamma; always true when the input
// claim was verified.
bool support_invariance(const Instance& inst, const GroupElem& gamma, const Element& b,
                        const HfSet& A);

struct HereditarySupport {
    enum class Status { yes, no, budget_exceeded };
    Status status = Status::no;
    // One (node, support) record per node of the transitive closure when yes.
    std::vector<SupportClaim> per_node;
};

// Breadth-first search for supports, bounded by support size; exceeding the
// budget is an explicit status, never a silent "no".
HereditarySupport is_hereditarily_symmetric(const Instance& inst, const HfSet& A,
                                            int max_support_size);

// Smallest-by-search ideal set whose pointwise stabilizer fixes x itself
// (a single ground point test per candidate).
Element definable_closure(const Instance& inst, const Element& a);

// Smallest-by-search b in the ideal whose pstab fixes every member of
// A_family individually; nullopt when the complete search finds none.
std::optional<Element> wo_criterion(const Instance& inst, const HfSet& A_family,
                                    int max_support_size);

// Minimal support of one set, by the same search (setwise fixing).
std::optional<Element> minimal_support(const Instance& inst, const HfSet& A,
                                       int max_support_size);

struct SelectorResult {
    HfSet selector;           // set of Kuratowski pairs <B, C>
    SupportClaim claim;       // support b, verified
    std::vector<HfSet> picks; // the chosen C per member, in member order
};

// The constructive selector: for each member B pick D in B, cover D's
// support by an image of b via a witness fixing a, and pull D back.
SelectorResult choice_selector(const Instance& inst, const HfSet& A_family, const Element& a,
                               const LargenessCertificate& cert, int max_support_size);

struct OrbitDecomposition {
    HfSet orbits;  // the set of pstab(a)-orbits of members of A
    bool orbits_setwise_fixed = true;
    bool member_support_fixes_orbit = true;  // the commutativity argument
};

// Abelian instances only (NotAbelian otherwise).
OrbitDecomposition orbit_decomposition(const Instance& inst, const HfSet& A, const Element& a,
                                       int max_support_size);

// Parity classes of a grid column as HF sets, the two-class family, and a
// selector candidate choosing `parity[col]` in every column.
HfSet parity_class(const Instance& inst, int col, int parity);
HfSet parity_pair(const Instance& inst, int col);
HfSet parity_selector(const Instance& inst, const std::vector<int>& parity);

struct RefuterWitness {
    GroupElem gamma;   // a unit shift in pstab(b)
    int column;        // whose class pair gets flipped
    HfSet pair_before; // <Y_col, chosen class>: the violated selection
};

// Exact witness that the selector candidate is not fixed by pstab(b):
// a unit shift on a column outside b flips that column's class pair while
// the candidate's value stays put. NoWitness when b meets every column.
RefuterWitness abelian_refuter(const Instance& inst, const HfSet& f_candidate,
                               const Element& b);

}  // namespace dynideal
