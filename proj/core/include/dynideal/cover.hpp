// Largeness certificates and cover witnesses.
//
// "b is x-large" means every ideal set can be pushed inside b by something
// fixing x pointwise. That universal statement is replaced by a finite,
// exactly-checkable certificate per instance:
//   BoundedQ:   rationals l < u with [l,u] inside b and x inside (l,u) —
//               stretching the margins covers any bounded set;
//   FiniteSym:  x inside b together with the count |b \ x|; covering needs
//               count >= k-1 (the size cap on the sets to cover).
// Certificates distinguish validity (the evidence is true of the pair) from
// sufficiency (the evidence still guarantees covering); the two can part
// ways for FiniteSym near the size cap, which is a real finiteness artifact.
// No witness is returned on construction alone: every operation re-verifies
// its output exactly before handing it back.

#pragma once

#include "dynideal/instance.hpp"

#include <optional>
#include <utility>

namespace dynideal {

struct LargenessCertificate {
    std::string instance;  // display name of the owning instance
    Element base;          // x
    Element large;         // b
    std::optional<std::pair<Rational, Rational>> hull;  // BoundedQ evidence
    std::optional<int> fresh_count;                     // FiniteSym evidence
};

bool certificate_valid(const Instance& inst, const LargenessCertificate& cert);
bool certificate_sufficient(const Instance& inst, const LargenessCertificate& cert);

// b = a united with [inf(a)-1, sup(a)+1] ([-1,1] for empty a). Throws
// Unbounded when a is not in the ideal.
std::pair<IntervalUnionSet, LargenessCertificate> a_large_bounded(const Instance& inst,
                                                                  const IntervalUnionSet& a);

// Some gamma in pstab(a) with c inside gamma. b: identity on the hull of a,
// margins stretched past the extremes of c. Throws CertificateInvalid.
PLMap cover_witness_bounded(const Instance& inst, const LargenessCertificate& cert,
                            const IntervalUnionSet& c);

// b = a plus the k-1 smallest fresh points. Needs room for a disjoint copy:
// N >= |a| + 2(k-1); throws InsufficientSpace otherwise.
std::pair<PointSet, LargenessCertificate> a_large_symmetric(const Instance& inst,
                                                            const PointSet& a);

FinitePermutation cover_witness_symmetric(const Instance& inst,
                                          const LargenessCertificate& cert,
                                          const PointSet& c);

// Instance-dispatching convenience used by the game strategies.
std::pair<Element, LargenessCertificate> a_large(const Instance& inst, const Element& a);
GroupElem cover_witness(const Instance& inst, const LargenessCertificate& cert,
                        const Element& c);

// gamma in pstab(base) with gamma.c inside b, plus a certificate for the
// grown base (base united with gamma.c, same b). For BoundedQ the image is
// compressed strictly inside the open margins, so two-sided slack survives.
std::pair<GroupElem, LargenessCertificate> shrink_cover(const Instance& inst,
                                                        const LargenessCertificate& cert,
                                                        const Element& c);

// Transport of the evidence along delta: (x,b) -> (delta.x, delta.b). The
// transported certificate is re-validated before being returned.
LargenessCertificate largeness_conjugation(const Instance& inst,
                                           const LargenessCertificate& cert,
                                           const GroupElem& delta);

}  // namespace dynideal
