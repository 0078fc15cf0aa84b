#pragma once

#include <cstdint>
#include <random>

#include "pwsyn/angle.hpp"
#include "pwsyn/errors.hpp"
#include "pwsyn/sets.hpp"

namespace pwsyn {

/// {n in [lo, hi] : frac(n alpha) < 1/2}.
inline WindowSet sturmian(const Angle& alpha, std::int64_t lo, std::int64_t hi) {
    WindowSet s(lo, hi);
    const Angle half(Rational(1, 2));
    for (std::int64_t n = lo; n <= hi; ++n)
        if ((BigInt(n) * alpha).frac() < half) s.insert(n);
    return s;
}

/// {n in [lo, hi] : n = residue mod modulus}.
inline WindowSet congruence_class(std::int64_t modulus, std::int64_t residue, std::int64_t lo, std::int64_t hi) {
    if (modulus < 1) throw BadBound("modulus must be >= 1");
    return WindowSet::from_predicate(lo, hi, [&](std::int64_t n) { return ((n - residue) % modulus + modulus) % modulus == 0; });
}

struct RandomPwsParams {
    double density = 0.3;       // background membership probability
    std::int64_t max_gap = 8;   // forced syndeticity: no gap exceeds this
    std::int64_t blocks = 4;    // number of solid runs planted
    std::int64_t block_length = 50;
};

/// Syndetic background (random members with gaps capped at max_gap) united
/// with planted solid runs; reproducible from the seed.
inline WindowSet random_thick_syndetic(std::int64_t lo, std::int64_t hi, std::uint64_t seed, const RandomPwsParams& p = {}) {
    if (p.max_gap < 1 || p.block_length < 1 || p.blocks < 0) throw BadBound("random set parameters must be positive");
    if (!(p.density >= 0 && p.density <= 1)) throw BadBound("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p.density);
    WindowSet s(lo, hi);
    std::int64_t last = lo - 1;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (coin(rng) || n - last >= p.max_gap) {
            s.insert(n);
            last = n;
        }
    }
    std::uniform_int_distribution<std::int64_t> where(lo, hi);
    for (std::int64_t b = 0; b < p.blocks; ++b) {
        const auto st = where(rng);
        for (std::int64_t n = st; n < st + p.block_length && n <= hi; ++n) s.insert(n);
    }
    return s;
}

} // namespace pwsyn
