// Piecewise-linear order automorphisms of the rational line.
//
// A PLMap is a continuous, strictly increasing bijection of the line made of
// finitely many affine pieces with positive rational slopes. The group
// operations (composition, inversion) and application are exact and closed,
// and the canonical form (no mergeable adjacent pieces) makes equality
// structural. This subgroup is rich enough to carry every construction in
// the workbench while staying finitely representable.

#pragma once

#include "dynideal/quad.hpp"
#include "dynideal/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dynideal {

class PLMap {
public:
    struct Piece {
        Rational slope;   // > 0
        Rational offset;
        Rational eval(const Rational& x) const { return slope * x + offset; }
        QuadExt eval(const QuadExt& x) const { return QuadExt(offset) + slope * x; }
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    // The identity: one piece, slope 1, offset 0.
    PLMap();

    // Pieces[i] lives on [breaks[i-1], breaks[i]] (unbounded at the ends).
    // Validates monotonicity, continuity and positive slopes; canonicalizes.
    PLMap(std::vector<Rational> breaks, std::vector<Piece> pieces);

    // Increasing interpolation through anchor points (x_i -> y_i), with the
    // given end-ray slopes. No anchors gives the identity.
    static PLMap from_anchors(const std::vector<std::pair<Rational, Rational>>& anchors,
                              const Rational& left_slope = Rational(1),
                              const Rational& right_slope = Rational(1));

    static PLMap translation(const Rational& delta);

    bool is_identity() const;

    Rational apply(const Rational& x) const;
    QuadExt apply(const QuadExt& x) const;
    Rational operator()(const Rational& x) const { return apply(x); }

    PLMap inverse() const;
    // (f.compose(g))(x) = f(g(x)); breakpoints of the result refine g's with
    // preimages of f's under g.
    PLMap compose(const PLMap& g) const;

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // Piece covering x (the right piece at a breakpoint; pieces agree there).
    const Piece& piece_at(const Rational& x) const;
    const Piece& piece_at(const QuadExt& x) const;

    // Index i such that everything >= breaks[i-1]... i.e. first piece whose
    // domain contains [x, +inf) start; used by block-image tail splitting.
    std::size_t piece_index_at(const Rational& x) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

    std::string str() const;

private:
    void validate_and_canonicalize();

    std::vector<Rational> breaks_;
    std::vector<Piece> pieces_;
};

inline PLMap operator*(const PLMap& f, const PLMap& g) { return f.compose(g); }

}  // namespace dynideal
