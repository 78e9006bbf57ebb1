#include "dynideal/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dynideal {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den < 0) v_ = BigRat(-num, -den);
    else v_ = BigRat(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return num().str() + "/" + den().str();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::pow(unsigned k) const {
    Rational acc(1), base = *this;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::size_t Rational::hash() const {
    static constexpr std::int64_t kMod = 1000000007;
    auto residue = [](const BigInt& v) {
        BigInt m = v % kMod;
        if (m < 0) m += kMod;
        return m.convert_to<std::size_t>();
    };
    std::size_t h = residue(num());
    h ^= residue(den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace dynideal
