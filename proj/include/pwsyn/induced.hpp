#pragma once

// Finite truncations of the induced sequences
//     omega_x = ( (T^{p_1(n)} x, ..., T^{p_d(n)} x) )_{n in Z}
//     xi_x    = ( (x, ..., x) [one per linear member],
//                 (T^{p_t(j)} x)_{t of degree >= 2, j in Z} )
// together with the shift sigma and the diagonal action T^infinity.
//
// A block remembers its provenance (system, base point, family, offsets), so
// every entry can be recomputed from scratch:
//     omega entry j, member i  = T^{applied_T + p_i(j + applied_shift)} x
//     xi head i                = T^{a_i * applied_shift + applied_T} x
//     xi tail j, member t      = T^{applied_T + p_t(j + applied_shift)} x
//
// act_sigma trims the radius (only the data actually held is shifted);
// recurrence_times recomputes at full radius instead.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

#include "pwsyn/errors.hpp"
#include "pwsyn/sets.hpp"
#include "pwsyn/spade.hpp"
#include "pwsyn/systems.hpp"

namespace pwsyn {

struct BlockProvenance {
    SystemSpec sys;
    Point x;
    PolyFamily family;
    std::int64_t K = 0;              // radius the block was built with
    std::int64_t applied_shift = 0;  // accumulated sigma offset
    BigInt applied_T = 0;            // accumulated T^infinity power
};

struct OmegaBlock {
    BlockProvenance prov;
    std::int64_t radius = 0;
    std::vector<std::vector<Point>> entries;  // entries[j + radius][i]

    const std::vector<Point>& at(std::int64_t j) const {
        if (std::abs(j) > radius) throw RadiusExhausted("index " + std::to_string(j) + " beyond radius " + std::to_string(radius));
        return entries[static_cast<std::size_t>(j + radius)];
    }
};

struct XiBlock {
    BlockProvenance prov;
    SpadeSplit split;
    std::int64_t radius = 0;
    std::vector<Point> head;                // one per linear member, in split.linear order
    std::vector<std::vector<Point>> tail;   // tail[j + radius][t], t over split.higher

    const std::vector<Point>& at(std::int64_t j) const {
        if (std::abs(j) > radius) throw RadiusExhausted("index " + std::to_string(j) + " beyond radius " + std::to_string(radius));
        return tail[static_cast<std::size_t>(j + radius)];
    }
};

inline bool operator==(const OmegaBlock& a, const OmegaBlock& b) { return a.radius == b.radius && a.entries == b.entries; }
inline bool operator==(const XiBlock& a, const XiBlock& b) { return a.radius == b.radius && a.head == b.head && a.tail == b.tail; }

/// Block with arbitrary offsets folded into the polynomial arguments.
inline OmegaBlock omega_block_at(const SystemSpec& sys, const Point& x, const PolyFamily& family, std::int64_t K, std::int64_t shift,
                                 const BigInt& tpow) {
    if (K < 0) throw BadBound("radius must be >= 0");
    OmegaBlock b{BlockProvenance{sys, x, family, K, shift, tpow}, K, {}};
    b.entries.reserve(static_cast<std::size_t>(2 * K + 1));
    for (std::int64_t j = -K; j <= K; ++j) {
        std::vector<Point> row;
        row.reserve(family.size());
        for (const auto& p : family) row.push_back(iterate(sys, x, tpow + p.eval(j + shift)));
        b.entries.push_back(std::move(row));
    }
    return b;
}

inline OmegaBlock omega_block(const SystemSpec& sys, const Point& x, const PolyFamily& family, std::int64_t K) {
    return omega_block_at(sys, x, family, K, 0, 0);
}

inline XiBlock xi_block_at(const SystemSpec& sys, const Point& x, const PolyFamily& family, std::int64_t K, std::int64_t shift,
                           const BigInt& tpow) {
    if (K < 0) throw BadBound("radius must be >= 0");
    auto check = check_spade(family);
    if (!std::holds_alternative<SpadeSplit>(check)) throw NotSpade("family violates the normal-form condition");
    XiBlock b{BlockProvenance{sys, x, family, K, shift, tpow}, std::get<SpadeSplit>(std::move(check)), K, {}, {}};
    for (const auto& a : b.split.slopes) b.head.push_back(iterate(sys, x, a * shift + tpow));
    b.tail.reserve(static_cast<std::size_t>(2 * K + 1));
    for (std::int64_t j = -K; j <= K; ++j) {
        std::vector<Point> row;
        row.reserve(b.split.higher.size());
        for (auto t : b.split.higher) row.push_back(iterate(sys, x, tpow + family[t].eval(j + shift)));
        b.tail.push_back(std::move(row));
    }
    return b;
}

inline XiBlock xi_block(const SystemSpec& sys, const Point& x, const PolyFamily& family, std::int64_t K) {
    return xi_block_at(sys, x, family, K, 0, 0);
}

/// Fresh evaluation of the block's provenance at its current radius.
inline OmegaBlock recompute(const OmegaBlock& b) {
    return omega_block_at(b.prov.sys, b.prov.x, b.prov.family, b.radius, b.prov.applied_shift, b.prov.applied_T);
}
inline XiBlock recompute(const XiBlock& b) {
    return xi_block_at(b.prov.sys, b.prov.x, b.prov.family, b.radius, b.prov.applied_shift, b.prov.applied_T);
}

namespace detail {
template <class Rows>
Rows trim_rows(const Rows& rows, std::int64_t radius, std::int64_t n) {
    const std::int64_t r = radius - std::abs(n);
    Rows out;
    out.reserve(static_cast<std::size_t>(2 * r + 1));
    for (std::int64_t j = -r; j <= r; ++j) out.push_back(rows[static_cast<std::size_t>(j + n + radius)]);
    return out;
}
inline void check_sigma(std::int64_t radius, std::int64_t n) {
    if (std::abs(n) > radius) throw RadiusExhausted("sigma^" + std::to_string(n) + " exceeds radius " + std::to_string(radius));
}
} // namespace detail

/// sigma^n: entry j of the result is entry j + n of b; radius shrinks by |n|.
inline OmegaBlock act_sigma(const OmegaBlock& b, std::int64_t n) {
    detail::check_sigma(b.radius, n);
    OmegaBlock out{b.prov, b.radius - std::abs(n), detail::trim_rows(b.entries, b.radius, n)};
    out.prov.applied_shift += n;
    return out;
}

/// sigma^n on xi blocks also moves each head coordinate by T^{a_i n}.
inline XiBlock act_sigma(const XiBlock& b, std::int64_t n) {
    detail::check_sigma(b.radius, n);
    XiBlock out{b.prov, b.split, b.radius - std::abs(n), {}, detail::trim_rows(b.tail, b.radius, n)};
    for (std::size_t i = 0; i < b.head.size(); ++i) out.head.push_back(iterate(b.prov.sys, b.head[i], b.split.slopes[i] * n));
    out.prov.applied_shift += n;
    return out;
}

/// (T^infinity)^m: T^m on every coordinate; radius unchanged.
inline OmegaBlock act_Tinf(const OmegaBlock& b, const BigInt& m) {
    OmegaBlock out{b.prov, b.radius, b.entries};
    for (auto& row : out.entries)
        for (auto& p : row) p = iterate(b.prov.sys, p, m);
    out.prov.applied_T += m;
    return out;
}
inline XiBlock act_Tinf(const XiBlock& b, const BigInt& m) {
    XiBlock out = b;
    for (auto& p : out.head) p = iterate(b.prov.sys, p, m);
    for (auto& row : out.tail)
        for (auto& p : row) p = iterate(b.prov.sys, p, m);
    out.prov.applied_T += m;
    return out;
}
inline OmegaBlock act_Tinf(const OmegaBlock& b, std::int64_t m) { return act_Tinf(b, BigInt(m)); }
inline XiBlock act_Tinf(const XiBlock& b, std::int64_t m) { return act_Tinf(b, BigInt(m)); }

namespace detail {
template <class Rows>
double rows_distance(const SystemSpec& sys, const Rows& a, std::int64_t ra, const Rows& b, std::int64_t rb, std::int64_t r, double stop) {
    double d = 0;
    for (std::int64_t j = -r; j <= r && d < stop; ++j) {
        const auto& x = a[static_cast<std::size_t>(j + ra)];
        const auto& y = b[static_cast<std::size_t>(j + rb)];
        if (x.size() != y.size()) throw BadBound("blocks have different shapes");
        for (std::size_t i = 0; i < x.size() && d < stop; ++i) d = std::max(d, distance(sys, x[i], y[i]));
    }
    return d;
}
inline void check_radius(std::int64_t r, std::int64_t ra, std::int64_t rb) {
    if (r < 0 || r > std::min(ra, rb)) throw RadiusExhausted("comparison radius " + std::to_string(r) + " exceeds block radius");
}
} // namespace detail

/// Sup of the system metric over the head and over entries with |j| <= r.
inline double block_distance(const OmegaBlock& a, const OmegaBlock& b, std::int64_t r) {
    detail::check_radius(r, a.radius, b.radius);
    return detail::rows_distance(a.prov.sys, a.entries, a.radius, b.entries, b.radius, r, std::numeric_limits<double>::infinity());
}

namespace detail {
inline double xi_distance(const XiBlock& a, const XiBlock& b, std::int64_t r, double stop) {
    check_radius(r, a.radius, b.radius);
    if (a.head.size() != b.head.size()) throw BadBound("blocks have different shapes");
    double d = 0;
    for (std::size_t i = 0; i < a.head.size() && d < stop; ++i) d = std::max(d, distance(a.prov.sys, a.head[i], b.head[i]));
    if (d >= stop) return d;
    return std::max(d, rows_distance(a.prov.sys, a.tail, a.radius, b.tail, b.radius, r, stop));
}
} // namespace detail

inline double block_distance(const XiBlock& a, const XiBlock& b, std::int64_t r) {
    return detail::xi_distance(a, b, r, std::numeric_limits<double>::infinity());
}

/// {n in [-N, N] : the xi block recomputed at shift n and full radius K is
/// within eps of the unshifted block}. Always contains 0.
inline WindowSet recurrence_times(const SystemSpec& sys, const Point& x, const PolyFamily& family, std::int64_t K, double eps,
                                  std::int64_t N) {
    if (!(eps > 0)) throw BadEpsilon("epsilon must be > 0");
    if (N < 0) throw BadBound("N must be >= 0");
    const XiBlock base = xi_block(sys, x, family, K);
    WindowSet out(-N, N);
    for (std::int64_t n = -N; n <= N; ++n) {
        const XiBlock moved = xi_block_at(sys, x, family, K, n, 0);
        if (detail::xi_distance(moved, base, K, eps) < eps) out.insert(n);
    }
    return out;
}

/// The two-sided periodic sequence (w_0 ... w_{L-1})^infinity with w_center
/// sitting at index 0.
template <class T>
class PeriodicSequence {
public:
    PeriodicSequence(std::vector<T> word, std::int64_t center) : word_(std::move(word)), center_(0) {
        if (word_.empty()) throw BadBound("periodic word must be nonempty");
        center_ = mod(center);
    }

    std::int64_t period() const noexcept { return static_cast<std::int64_t>(word_.size()); }
    const T& at(std::int64_t i) const { return word_[static_cast<std::size_t>(mod(center_ + i))]; }

    /// (sigma^n y)_i = y_{i+n}.
    PeriodicSequence shifted(std::int64_t n) const { return PeriodicSequence(word_, center_ + n); }

    std::vector<T> materialize(std::int64_t radius) const {
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(2 * radius + 1));
        for (std::int64_t i = -radius; i <= radius; ++i) out.push_back(at(i));
        return out;
    }

private:
    std::int64_t mod(std::int64_t v) const {
        const auto L = static_cast<std::int64_t>(word_.size());
        return ((v % L) + L) % L;
    }

    std::vector<T> word_;
    std::int64_t center_;
};

/// Word of odd length 2k+1 is read as (x_{-k}, ..., x_k); in general the
/// letter at position size/2 lands on index 0.
template <class T>
PeriodicSequence<T> periodic_extension(std::vector<T> word) {
    const auto c = static_cast<std::int64_t>(word.size() / 2);
    return PeriodicSequence<T>(std::move(word), c);
}

} // namespace pwsyn
