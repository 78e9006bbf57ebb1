// Exact arithmetic in Q(sqrt 2): values a + b*sqrt2 with rational a, b.
//
// These carry the irrational suprema of bounded increasing rational sets.
// Ordering is decided exactly by integer sign computations; a value is
// rational iff b = 0, and a^2 = 2 b^2 never holds for nonzero rationals,
// so all comparisons are strict where they should be.

#pragma once

#include "dynideal/rational.hpp"

#include <compare>
#include <string>

namespace dynideal {

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}   // NOLINT: rational embeds implicitly
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }

    // Requires is_rational().
    const Rational& as_rational() const;

    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
    }
    // Scaling by rationals is all the affine machinery ever needs.
    friend QuadExt operator*(const Rational& c, const QuadExt& x) {
        return QuadExt(c * x.a_, c * x.b_);
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical text form "p/q + r/s*sqrt2".
    std::string str() const;
    static QuadExt parse(const std::string& text);

private:
    Rational a_{0};
    Rational b_{0};
};

// Some rational strictly between lo and hi (requires lo < hi); dyadic
// bisection with exact comparisons.
Rational rational_between(const QuadExt& lo, const QuadExt& hi);

// Pell convergents of sqrt2. Lower ones increase to sqrt2 (1, 7/5, 41/29, ...),
// upper ones decrease to it (3/2, 17/12, 99/70, ...). Both satisfy
// (p,q) -> (3p+4q, 2p+3q), and they are the exact rational ladders used by
// blocks whose limit is irrational.
Rational pell_lower(unsigned k);
Rational pell_upper(unsigned k);

}  // namespace dynideal
