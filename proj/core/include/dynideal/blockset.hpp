// Finite symbolic descriptions of scattered countable subsets of the line:
// finitely many rational points plus convergent "blocks".
//
// A block is a scaffold of elements e_0, e_1, ... converging monotonically to
// an exact limit:
//   - rational limit L: geometric law e_k = L - (L - start) * ratio^k;
//   - irrational limit a + b*sqrt2: Pell-convergent law e_k = a + b*u_{j+k},
//     where u is the lower (1, 7/5, 41/29, ...) or upper (3/2, 17/12, ...)
//     convergent ladder of sqrt2, whichever approaches from the right side.
//     (A geometric sequence of rationals has a rational limit, so irrational
//     limits need the convergent law; it is exactly closed under affine
//     images with rational coefficients, just like the geometric one.)
//
// A block may carry a bounded "pattern": a canonical BlockSet inside [0,1]
// whose min is 0. Cell k of the scaffold then hosts an affine copy of the
// pattern squeezed between e_k and the midpoint towards e_{k+1}. Patterns
// nest, which is what gives the type arbitrary finite Cantor-Bendixson rank;
// a block without a pattern is the plain scaffold (pattern {0}).
//
// Everything is canonical: points are sorted and deduplicated against block
// elements, a point sitting on a block's rational limit is absorbed into the
// limit_included flag, and same-limit blocks whose scaffolds align (equal
// ratio and law, coefficient quotient a power of the ratio, equal patterns)
// are merged. Equality is structural equality of canonical forms.

#pragma once

#include "dynideal/iuset.hpp"
#include "dynideal/plmap.hpp"
#include "dynideal/quad.hpp"
#include "dynideal/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dynideal {

class BlockSet;
using BlockSetPtr = std::shared_ptr<const BlockSet>;

struct Block {
    bool ascending = true;
    bool limit_included = false;  // only when the limit is rational
    Rational start;               // e_0; for Pell blocks derived from pell_index
    QuadExt limit;
    Rational ratio;               // in (0,1); used by the geometric law
    unsigned pell_index = 0;      // used by the Pell law
    BlockSetPtr pattern;          // null = plain scaffold

    static Block geometric(bool ascending, Rational start, Rational limit,
                           Rational ratio, bool limit_included = false,
                           BlockSetPtr pattern = nullptr);
    static Block pell(bool ascending, QuadExt limit, unsigned index,
                      BlockSetPtr pattern = nullptr);

    bool is_pell() const { return !limit.is_rational(); }

    // Scaffold element e_k.
    Rational element(unsigned k) const;
    // Half the gap between e_k and e_{k+1} (always positive).
    Rational half_gap(unsigned k) const;

    QuadExt inf() const { return ascending ? QuadExt(start) : limit; }
    QuadExt sup() const { return ascending ? limit : QuadExt(start); }

    bool contains(const Rational& x) const;

    friend bool operator==(const Block&, const Block&);
};

class BlockSet {
public:
    BlockSet() = default;
    BlockSet(std::vector<Rational> points, std::vector<Block> blocks);

    static BlockSet from_points(std::vector<Rational> pts);
    static BlockSet single(Block b) { return BlockSet({}, {std::move(b)}); }

    const std::vector<Rational>& points() const { return points_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return points_.empty() && blocks_.empty(); }

    bool contains(const Rational& x) const;
    BlockSet unite(const BlockSet& other) const;
    BlockSet restrict(const Interval& window) const;

    // Affine image a*x + b, a != 0; negative a reverses orientations.
    BlockSet affine_image(const Rational& a, const Rational& b) const;

    QuadExt inf() const;  // throws on empty
    QuadExt sup() const;

    // Least element; exists iff the set is well-ordered and nonempty.
    Rational min() const;

    // Some deterministic sample of elements (scaffold-first), deduplicated.
    std::vector<Rational> enumerate(unsigned budget) const;

    // Sound, representation-level subset test: decides all pairs produced by
    // union/image/restrict algebra (identical or tail-aligned components).
    bool subset_of(const BlockSet& other) const;

    friend bool operator==(const BlockSet&, const BlockSet&) = default;

    std::string str() const;

private:
    void canonicalize();
    std::vector<Rational> points_;
    std::vector<Block> blocks_;
};

// --- the representation-level predicates of the ideal catalogue ---

// Exact image under a PL automorphism: each block splits into finitely many
// head cells (mapped recursively) plus one tail block inside a single affine
// piece; ratio, law and pattern are preserved.
BlockSet image_set(const PLMap& f, const BlockSet& s);

// No infinite descending sequence; on the representation: no descending
// block anywhere, including inside patterns.
bool is_well_ordered(const BlockSet& s);

// For every rational z the part below z has an upper bound strictly below z;
// on the representation: every limit approached from below is irrational.
bool is_bounded_below_every(const BlockSet& s);

// Cantor-Bendixson rank of the closure: 0 for empty, 1 for finite nonempty,
// each scaffold layer adds 1 (its limit survives one more derivative).
unsigned cb_rank(const BlockSet& s);

// All limits rational and included (recursively): the set is closed, the
// representation-level membership test for the closed-countable ideal.
bool is_closed(const BlockSet& s);

// f fixes s pointwise, decided exactly on the representation.
bool fixes_pointwise(const PLMap& f, const BlockSet& s);

// Reflection x -> -x (an exact affine image; orientations flip).
BlockSet reflect(const BlockSet& s);

// Finite-stage Cantor-Bendixson measure for plays of the interleaving game:
// recognize exact geometric runs of at least min_run members (ratio taken
// from exact distance quotients, limit a point of the set), replace the set
// by the run limits, iterate. Finite sets with no runs have rank 1, empty
// rank 0. Four-member runs are immune to the accidental three-point
// progressions of quarter-subdivision lattices.
unsigned run_completion_rank(std::vector<Rational> pts, unsigned min_run = 4);

}  // namespace dynideal
