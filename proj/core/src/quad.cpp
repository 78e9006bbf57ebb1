#include "dynideal/quad.hpp"

#include <stdexcept>

namespace dynideal {

const Rational& QuadExt::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadExt: not rational: " + str());
    return a_;
}

int QuadExt::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2. Equality cannot happen for
    // nonzero rationals, so the comparison is decisive.
    Rational a2 = a_ * a_, b2 = Rational(2) * b_ * b_;
    if (sa > 0) return a2 > b2 ? 1 : -1;   // a > 0, b < 0
    return b2 > a2 ? 1 : -1;               // a < 0, b > 0
}

std::string QuadExt::str() const {
    return a_.str() + " + " + b_.str() + "*sqrt2";
}

QuadExt QuadExt::parse(const std::string& text) {
    auto plus = text.find(" + ");
    auto star = text.rfind("*sqrt2");
    if (plus == std::string::npos || star == std::string::npos || star < plus) {
        // Bare rationals are accepted as a convenience.
        return QuadExt(Rational::parse(text));
    }
    Rational a = Rational::parse(text.substr(0, plus));
    Rational b = Rational::parse(text.substr(plus + 3, star - plus - 3));
    return QuadExt(std::move(a), std::move(b));
}

Rational rational_between(const QuadExt& lo, const QuadExt& hi) {
    if (!(lo < hi)) throw std::domain_error("rational_between: empty interval");
    Rational L = lo.rat_part() - Rational(2) * lo.irr_part().abs() - Rational(1);
    Rational U = hi.rat_part() + Rational(2) * hi.irr_part().abs() + Rational(1);
    while (true) {
        Rational mid = midpoint(L, U);
        QuadExt q{mid};
        if (q <= lo) L = mid;
        else if (q >= hi) U = mid;
        else return mid;
    }
}

namespace {
Rational pell(unsigned k, BigInt p, BigInt q) {
    for (unsigned i = 0; i < k; ++i) {
        BigInt np = 3 * p + 4 * q;
        q = 2 * p + 3 * q;
        p = np;
    }
    return Rational(p, q);
}
}  // namespace

Rational pell_lower(unsigned k) { return pell(k, 1, 1); }
Rational pell_upper(unsigned k) { return pell(k, 3, 2); }

}  // namespace dynideal
