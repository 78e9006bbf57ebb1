// Seeded deterministic randomness for samplers, games and property sweeps.
//
// Only the raw mt19937_64 stream is used (std distributions are not
// reproducible across standard libraries). All helpers are small exact
// functions of that stream, so equal seeds give bit-identical runs anywhere.

#pragma once

#include "dynideal/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace dynideal {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). n = 0 is a caller bug.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive ends
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() & 1u) != 0; }

    // Geometric-ish small size around a hint; always >= 0, usually <= 2*hint.
    int size_around(int hint) {
        if (hint <= 0) return coin() ? 0 : static_cast<int>(below(2));
        int s = 0;
        for (int i = 0; i < 2 * hint + 2 && coin(); ++i) ++s;
        return s <= 2 * hint ? s : 2 * hint;
    }

    // Random rational with small denominator inside [lo, hi].
    Rational rational_in(const Rational& lo, const Rational& hi) {
        static const int dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
        Rational den(dens[below(8)]);
        // Numerator grid: ceil(lo*den) .. floor(hi*den).
        BigInt lo_num = (lo * den).num(), lo_den = (lo * den).den();
        BigInt hi_num = (hi * den).num(), hi_den = (hi * den).den();
        BigInt lo_i = lo_num / lo_den + (lo_num % lo_den != 0 && lo_num > 0 ? 1 : 0);
        BigInt hi_i = hi_num / hi_den - (hi_num % hi_den != 0 && hi_num < 0 ? 1 : 0);
        if (lo_i > hi_i) return midpoint(lo, hi);
        BigInt span = hi_i - lo_i + 1;
        std::uint64_t cap = span > 64 ? 64 : span.convert_to<std::uint64_t>();
        BigInt pick = lo_i + BigInt(below(cap));
        return Rational(pick, den.num());
    }

    // k distinct values out of {0, ..., n-1}, sorted.
    std::vector<int> sample_subset(int n, int k);

private:
    std::mt19937_64 engine_;
};

inline std::vector<int> Rng::sample_subset(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out;
    for (int i = 0; i < k && !pool.empty(); ++i) {
        auto idx = below(pool.size());
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dynideal
