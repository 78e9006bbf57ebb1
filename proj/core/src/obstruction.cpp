#include "dynideal/obstruction.hpp"

#include "dynideal/errors.hpp"

#include <memory>

namespace dynideal {

RankObstruction refute_cofinal_countableclosed(const BlockSet& b) {
    if (!is_closed(b)) throw NotInIdeal("refute_cofinal: b is not closed");

    RankObstruction out;
    out.rank_b = cb_rank(b);
    if (b.empty()) {
        out.witness = BlockSet::from_points({Rational(1, 2)});
    } else {
        // Squeeze a copy of b into [0,1] with min 0, stack it as the pattern
        // of one more scaffold layer.
        QuadExt lo = b.inf(), hi = b.sup();
        BlockSet pattern = b;
        Rational shift = -lo.as_rational();  // closed sets have rational hull
        pattern = pattern.affine_image(Rational(1), shift);
        QuadExt width = hi - lo;
        if (width.sign() > 0)
            pattern = pattern.affine_image(Rational(1) / width.as_rational(), Rational(0));
        out.witness = BlockSet::single(
            Block::geometric(true, Rational(1, 4), Rational(1, 2), Rational(1, 2), true,
                             std::make_shared<const BlockSet>(std::move(pattern))));
    }
    out.rank_c = cb_rank(out.witness);
    if (out.rank_c != out.rank_b + 1)
        throw ConfigError("refute_cofinal: rank arithmetic failed");
    out.invariants[0] =
        "cb-rank is preserved by every automorphism image of a member";
    out.invariants[1] = "cb-rank is monotone under inclusion of members";
    return out;
}

}  // namespace dynideal
