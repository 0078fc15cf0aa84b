#pragma once

// Return-time sets of polynomial families along explicit orbits, and the
// purely combinatorial sets {(m, n) : m + p_i(n) in S for all i}.
//
// Ball membership is strict (distance < eps). Windows are finite, so the
// combinatorial sets carry a validity mask of the (m, n) whose evaluations
// all land inside S's window; nothing outside the mask is ever claimed.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pwsyn/errors.hpp"
#include "pwsyn/sets.hpp"
#include "pwsyn/spade.hpp"
#include "pwsyn/systems.hpp"

namespace pwsyn {

struct ReturnQuery {
    SystemSpec sys;
    Point x;
    Point center;
    double eps = 0.1;
    PolyFamily family;
    std::int64_t lo = 0, hi = 0;  // 1D window
    Box box;                      // 2D box
};

namespace detail {
inline void check_query(const ReturnQuery& q) {
    if (!(q.eps > 0)) throw BadEpsilon("epsilon must be > 0");
    require_vanishing(q.family);
}
} // namespace detail

/// {n in [lo, hi] : T^{p_i(n)} x within eps of center for every i}.
inline WindowSet return_set_1d(const ReturnQuery& q) {
    detail::check_query(q);
    WindowSet out(q.lo, q.hi);
    for (std::int64_t n = q.lo; n <= q.hi; ++n) {
        bool all = true;
        for (std::size_t i = 0; i < q.family.size() && all; ++i)
            all = in_ball(q.sys, iterate(q.sys, q.x, q.family[i].eval(n)), q.center, q.eps);
        if (all) out.insert(n);
    }
    return out;
}

/// {(m, n) in box : T^{m + p_i(n)} x within eps of center for every i}.
inline GridSet return_set_2d(const ReturnQuery& q) {
    detail::check_query(q);
    GridSet out(q.box);
    std::vector<BigInt> vals(q.family.size());
    for (std::int64_t n = q.box.nlo; n <= q.box.nhi; ++n) {
        for (std::size_t i = 0; i < q.family.size(); ++i) vals[i] = q.family[i].eval(n);
        for (std::int64_t m = q.box.mlo; m <= q.box.mhi; ++m) {
            bool all = true;
            for (std::size_t i = 0; i < vals.size() && all; ++i) all = in_ball(q.sys, iterate(q.sys, q.x, vals[i] + m), q.center, q.eps);
            if (all) out.insert(m, n);
        }
    }
    return out;
}

struct CombinatorialSet {
    GridSet members;
    GridSet validity;
};

/// members = {(m, n) : every m + p_i(n) lies in S}; validity = {(m, n) :
/// every m + p_i(n) lies in S's window}.
inline CombinatorialSet combinatorial_set_2d(const WindowSet& s, const PolyFamily& family, const Box& box) {
    CombinatorialSet out{GridSet(box), GridSet(box)};
    std::vector<BigInt> vals(family.size());
    for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
        for (std::size_t i = 0; i < family.size(); ++i) vals[i] = family[i].eval(n);
        for (std::int64_t m = box.mlo; m <= box.mhi; ++m) {
            bool valid = true, member = true;
            for (const auto& v : vals) {
                const BigInt k = v + m;
                if (k < s.lo() || k > s.hi()) {
                    valid = false;
                    break;
                }
                member = member && s.contains(static_cast<std::int64_t>(k));
            }
            if (valid) {
                out.validity.insert(m, n);
                if (member) out.members.insert(m, n);
            }
        }
    }
    return out;
}

/// Some a with target ∩ [-N, N] ⊆ {n : a + p_i(n) in S for all i}, scanning
/// a in the order 0, 1, -1, 2, -2, ... over every a that keeps the needed
/// evaluations inside S's window.
inline std::optional<std::int64_t> shift_cover_search(const WindowSet& s, const PolyFamily& family, const WindowSet& target,
                                                      std::int64_t N) {
    if (N < 0) throw BadBound("N must be >= 0");
    std::vector<std::int64_t> needed;
    for (std::int64_t n = -N; n <= N; ++n) {
        if (!target.contains(n)) continue;
        for (const auto& p : family) needed.push_back(to_i64(p.eval(n)));
    }
    if (needed.empty()) throw EmptySet("target has no members in [-N, N]");
    const auto [vmin, vmax] = std::minmax_element(needed.begin(), needed.end());
    if (*vmax - *vmin > s.hi() - s.lo()) return std::nullopt;  // no a keeps every evaluation in-window
    const std::int64_t alo = s.lo() - *vmin, ahi = s.hi() - *vmax;
    auto works = [&](std::int64_t a) {
        for (auto v : needed)
            if (!s.contains(a + v)) return false;
        return true;
    };
    const std::int64_t reach = std::max(std::abs(alo), std::abs(ahi));
    for (std::int64_t r = 0; r <= reach; ++r) {
        if (r >= alo && r <= ahi && works(r)) return r;
        if (r > 0 && -r >= alo && -r <= ahi && works(-r)) return -r;
    }
    return std::nullopt;
}

/// Translation t with t + (A ∩ [-M, M]^2) ⊆ B, preferring small |t|_1 then
/// lexicographic order. Returns nullopt when the patch is empty or nothing fits.
inline std::optional<std::pair<std::int64_t, std::int64_t>> find_translation(const GridSet& a, std::int64_t M, const GridSet& b) {
    std::vector<std::pair<std::int64_t, std::int64_t>> patch;
    for (auto [m, n] : a.members())
        if (std::abs(m) <= M && std::abs(n) <= M) patch.emplace_back(m, n);
    if (patch.empty()) return std::nullopt;
    const auto& box = b.box();
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    auto key = [](const std::pair<std::int64_t, std::int64_t>& t) { return std::make_tuple(std::abs(t.first) + std::abs(t.second), t.first, t.second); };
    for (std::int64_t tm = box.mlo - M; tm <= box.mhi + M; ++tm)
        for (std::int64_t tn = box.nlo - M; tn <= box.nhi + M; ++tn) {
            if (best && key({tm, tn}) >= key(*best)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < patch.size() && ok; ++i) ok = b.contains(patch[i].first + tm, patch[i].second + tn);
            if (ok) best = std::make_pair(tm, tn);
        }
    return best;
}

/// Independent check for rational circle rotations x -> x + a/q: residues are
/// computed by Horner's rule on the cleared-denominator monomial form modulo
/// an integer, never through the binomial basis or Angle arithmetic.
struct ModularRotation {
    BigInt Q;     // common denominator
    BigInt step;  // alpha = step / Q
    BigInt start; // x = start / Q
    BigInt target;// center = target / Q
};

inline std::optional<ModularRotation> as_modular_rotation(const SystemSpec& sys, const Point& x, const Point& center) {
    const auto* rot = std::get_if<TorusRotation>(&sys);
    if (!rot || rot->alpha.size() != 1 || !rot->alpha[0].value.exact()) return std::nullopt;
    const auto* px = std::get_if<ContinuousPoint>(&x);
    const auto* pc = std::get_if<ContinuousPoint>(&center);
    if (!px || !pc || px->coords.size() != 1 || pc->coords.size() != 1 || !px->coords[0].exact() || !pc->coords[0].exact())
        return std::nullopt;
    const Rational a = rot->alpha[0].value.rational(), u = px->coords[0].rational(), c = pc->coords[0].rational();
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    const BigInt Q = lcm(lcm(denominator(a), denominator(u)), denominator(c));
    return ModularRotation{Q, numerator(a) * (Q / denominator(a)), numerator(u) * (Q / denominator(u)), numerator(c) * (Q / denominator(c))};
}

inline WindowSet modular_rotation_oracle(const ModularRotation& r, const PolyFamily& family, double eps, std::int64_t lo, std::int64_t hi) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    struct Cleared {
        BigInt D;
        std::vector<BigInt> coeffs;  // D * a_i
    };
    std::vector<Cleared> polys;
    for (const auto& p : family) {
        BigInt D = 1;
        for (const auto& a : p.monomial_coeffs()) D = lcm(D, denominator(a));
        Cleared c{D, {}};
        for (const auto& a : p.monomial_coeffs()) c.coeffs.push_back(numerator(a) * (D / denominator(a)));
        polys.push_back(std::move(c));
    }
    auto mod = [](const BigInt& v, const BigInt& m) {
        BigInt t = v % m;
        return t < 0 ? BigInt(t + m) : t;
    };
    WindowSet out(lo, hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
        bool all = true;
        for (std::size_t i = 0; i < polys.size() && all; ++i) {
            const auto& c = polys[i];
            const BigInt M = c.D * r.Q;
            BigInt acc = 0;
            for (std::size_t k = c.coeffs.size(); k-- > 0;) acc = mod(acc * n + c.coeffs[k], M);
            const BigInt pn_mod_q = acc / c.D;  // p(n) mod Q
            const BigInt s = mod(r.start + pn_mod_q * r.step - r.target, r.Q);
            const BigInt dist_num = (2 * s > r.Q) ? BigInt(r.Q - s) : s;
            all = Rational(dist_num, r.Q).convert_to<double>() < eps;
        }
        if (all) out.insert(n);
    }
    return out;
}

} // namespace pwsyn
