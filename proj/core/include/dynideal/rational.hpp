// Exact rational arithmetic over arbitrary-precision integers.
//
// Every value is kept in lowest terms with a positive denominator, so
// equality is structural and hashing is well defined. There is no rounding
// anywhere in this library; all downstream order computations rely on that.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace dynideal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}                      // NOLINT: implicit by design
    Rational(std::int64_t v) : v_(v) {}             // NOLINT
    Rational(const BigInt& v) : v_(v) {}            // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    const BigRat& raw() const { return v_; }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // Canonical text form "p/q" (q > 0, lowest terms); parse accepts "p" too.
    std::string str() const;
    static Rational parse(const std::string& text);

    // Exact nonnegative-integer power.
    Rational pow(unsigned k) const;

    std::size_t hash() const;

private:
    BigRat v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Midpoint helper used all over the interval machinery.
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

}  // namespace dynideal

template <> struct std::hash<dynideal::Rational> {
    std::size_t operator()(const dynideal::Rational& r) const { return r.hash(); }
};
