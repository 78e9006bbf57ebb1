// Finite order-matching: an automorphism moving one finite set onto another
// while fixing a prescribed set pointwise. The finite core of the
// back-and-forth method: such a map exists iff the two sets put equally many
// points into every gap of the fixed set.

#pragma once

#include "dynideal/iuset.hpp"
#include "dynideal/plmap.hpp"

#include <vector>

namespace dynideal {

// Returns an order automorphism pi with pi fixing `fix` pointwise and
// pi(d0) = d1. Throws SizeMismatch when |d0| != |d1| and GapMismatch when the
// per-gap counts differ (no order-preserving map fixing `fix` exists then).
// The returned map is re-verified against both requirements before return.
PLMap match_finite_sets(std::vector<Rational> d0, std::vector<Rational> d1,
                        const IntervalUnionSet& fix);

}  // namespace dynideal
