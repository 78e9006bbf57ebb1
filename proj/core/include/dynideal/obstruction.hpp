// The rank obstruction for the closed-countable ideal: orbits preserve
// Cantor-Bendixson rank, so no single member's orbit is cofinal.

#pragma once

#include "dynideal/blockset.hpp"

#include <string>

namespace dynideal {

struct RankObstruction {
    BlockSet witness;          // c, one rank level above b, inside [0,1]
    unsigned rank_b = 0;
    unsigned rank_c = 0;
    // The two exact invariants that jointly forbid c inside any image of b.
    std::string invariants[2];
};

// Builds c with cb_rank(c) = cb_rank(b) + 1 living inside [0,1]. b must be a
// member of the closed-countable ideal (closed, inside [0,1]).
RankObstruction refute_cofinal_countableclosed(const BlockSet& b);

}  // namespace dynideal
