#pragma once

// Explicit minimal systems with closed-form iteration:
//   torus rotation      x -> x + alpha            (mod 1, any dimension)
//   skew product        (x, y) -> (x + alpha, y + x)
//   Heisenberg nil      g Gamma -> tau g Gamma,  tau = (alpha, beta, 0)
//   indicator subshift  the left shift acting on a windowed 0/1 word
//
// Heisenberg coordinates (x, y, z) stand for the upper unitriangular matrix
// [[1, x, z], [0, 1, y], [0, 0, 1]], so (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y').
// The fundamental domain is [0,1)^3, reached by right-multiplying with
// (-floor x, -floor y, c) for the integer c that puts z into [0, 1).

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pwsyn/angle.hpp"
#include "pwsyn/errors.hpp"
#include "pwsyn/polynomial.hpp"
#include "pwsyn/sets.hpp"

namespace pwsyn {

/// A parameter together with the expression it was parsed from.
struct Param {
    Angle value;
    std::string expr;

    static Param parse(const std::string& e) { return Param{parse_angle(e), e}; }
};

struct TorusRotation {
    std::vector<Param> alpha;
};
struct SkewProduct {
    Param alpha;
};
struct HeisenbergNil {
    Param alpha;
    Param beta;
};
struct IndicatorSubshift {
    WindowSet base;
};

using SystemSpec = std::variant<TorusRotation, SkewProduct, HeisenbergNil, IndicatorSubshift>;

struct ContinuousPoint {
    std::vector<Angle> coords;
};

/// y_k = word(center + k), defined while center + k stays inside the word's window.
struct SymbolicPoint {
    std::shared_ptr<const WindowSet> word;
    std::int64_t center = 0;

    std::int64_t radius() const noexcept { return std::min(center - word->lo(), word->hi() - center); }
    bool defined(std::int64_t k) const noexcept { return center + k >= word->lo() && center + k <= word->hi(); }
    bool letter(std::int64_t k) const {
        if (!defined(k)) throw WindowExhausted("letter " + std::to_string(k) + " outside the symbolic window");
        return word->contains(center + k);
    }
};

using Point = std::variant<ContinuousPoint, SymbolicPoint>;

inline bool operator==(const SymbolicPoint& a, const SymbolicPoint& b) {
    if (a.word == b.word) return a.center == b.center;
    return a.word->lo() - a.center == b.word->lo() - b.center && a.word->hi() - a.center == b.word->hi() - b.center &&
           a.word->bits() == b.word->bits();
}
inline bool operator==(const ContinuousPoint& a, const ContinuousPoint& b) { return a.coords == b.coords; }

inline std::string system_name(const SystemSpec& sys) {
    struct V {
        std::string operator()(const TorusRotation&) const { return "rotation"; }
        std::string operator()(const SkewProduct&) const { return "skew"; }
        std::string operator()(const HeisenbergNil&) const { return "heisenberg"; }
        std::string operator()(const IndicatorSubshift&) const { return "subshift"; }
    };
    return std::visit(V{}, sys);
}

inline Point indicator_subshift_point(const WindowSet& s) {
    if (s.empty()) throw EmptySet("indicator point of an empty set");
    return SymbolicPoint{std::make_shared<const WindowSet>(s), 0};
}

/// The canonical starting point: 0 on tori, the identity coset on the
/// Heisenberg nilmanifold, 1_S for a subshift.
inline Point base_point(const SystemSpec& sys) {
    struct V {
        Point operator()(const TorusRotation& t) const { return ContinuousPoint{std::vector<Angle>(t.alpha.size(), Angle(0))}; }
        Point operator()(const SkewProduct&) const { return ContinuousPoint{{Angle(0), Angle(0)}}; }
        Point operator()(const HeisenbergNil&) const { return ContinuousPoint{{Angle(0), Angle(0), Angle(0)}}; }
        Point operator()(const IndicatorSubshift& s) const { return indicator_subshift_point(s.base); }
    };
    return std::visit(V{}, sys);
}

namespace detail {

inline const ContinuousPoint& continuous(const Point& p, std::size_t dim) {
    const auto* c = std::get_if<ContinuousPoint>(&p);
    if (!c || c->coords.size() != dim) throw BadBound("point does not match the system");
    return *c;
}
inline const SymbolicPoint& symbolic(const Point& p) {
    const auto* s = std::get_if<SymbolicPoint>(&p);
    if (!s) throw BadBound("point does not match the system");
    return *s;
}

inline ContinuousPoint heisenberg_reduce(const Angle& x, const Angle& y, const Angle& z) {
    const Angle fx = x.frac(), fy = y.frac();
    const Angle zz = z - x * y.floor();
    return ContinuousPoint{{fx, fy, zz.frac()}};
}

} // namespace detail

/// T^n x in closed form.
inline Point iterate(const SystemSpec& sys, const Point& x, const BigInt& n) {
    struct V {
        const Point& x;
        const BigInt& n;
        Point operator()(const TorusRotation& t) const {
            const auto& p = detail::continuous(x, t.alpha.size());
            ContinuousPoint out;
            out.coords.reserve(p.coords.size());
            for (std::size_t i = 0; i < p.coords.size(); ++i) out.coords.push_back((p.coords[i] + n * t.alpha[i].value).frac());
            return out;
        }
        Point operator()(const SkewProduct& s) const {
            const auto& p = detail::continuous(x, 2);
            const BigInt c2 = n * (n - 1) / 2;
            return ContinuousPoint{{(p.coords[0] + n * s.alpha.value).frac(),
                                    (p.coords[1] + n * p.coords[0] + c2 * s.alpha.value).frac()}};
        }
        Point operator()(const HeisenbergNil& h) const {
            const auto& p = detail::continuous(x, 3);
            const BigInt c2 = n * (n - 1) / 2;
            const Angle na = n * h.alpha.value;
            // tau^n = (n alpha, n beta, C(n,2) alpha beta), left-multiplied onto (x, y, z)
            return detail::heisenberg_reduce(na + p.coords[0], n * h.beta.value + p.coords[1],
                                             c2 * (h.alpha.value * h.beta.value) + p.coords[2] + na * p.coords[1]);
        }
        Point operator()(const IndicatorSubshift&) const {
            const auto& p = detail::symbolic(x);
            const BigInt c = BigInt(p.center) + n;
            if (c < p.word->lo() || c > p.word->hi())
                throw WindowExhausted("shift by " + n.str() + " leaves the symbolic window");
            return SymbolicPoint{p.word, static_cast<std::int64_t>(c)};
        }
    };
    return std::visit(V{x, n}, sys);
}
inline Point iterate(const SystemSpec& sys, const Point& x, std::int64_t n) { return iterate(sys, x, BigInt(n)); }

inline std::vector<Point> poly_orbit(const SystemSpec& sys, const Point& x, const IntegralPolynomial& p, std::int64_t n0, std::int64_t n1) {
    if (n0 > n1) throw BadBound("empty orbit range");
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n1 - n0 + 1));
    for (std::int64_t n = n0; n <= n1; ++n) out.push_back(iterate(sys, x, p.eval(n)));
    return out;
}

/// min{|i| : a_i != c_i} searched up to the common radius; nullopt when the
/// words agree on all of it.
inline std::optional<std::int64_t> first_disagreement(const SymbolicPoint& a, const SymbolicPoint& c) {
    const std::int64_t R = std::min(a.radius(), c.radius());
    if (R < 0) throw WindowExhausted("center outside the symbolic window");
    for (std::int64_t k = 0; k <= R; ++k)
        if (a.letter(k) != c.letter(k) || a.letter(-k) != c.letter(-k)) return k;
    return std::nullopt;
}

/// System metric: max circle distance on tori, 27-translate Euclidean
/// quotient distance on the Heisenberg nilmanifold, 1/(k+1) on the subshift.
/// Throws WindowExhausted when two distinct symbolic points agree on their
/// whole common window.
inline double distance(const SystemSpec& sys, const Point& a, const Point& c) {
    struct V {
        const Point& a;
        const Point& c;
        double operator()(const TorusRotation& t) const {
            const auto& pa = detail::continuous(a, t.alpha.size());
            const auto& pc = detail::continuous(c, t.alpha.size());
            double d = 0;
            for (std::size_t i = 0; i < pa.coords.size(); ++i) d = std::max(d, circle_distance(pa.coords[i], pc.coords[i]));
            return d;
        }
        double operator()(const SkewProduct&) const {
            const auto& pa = detail::continuous(a, 2);
            const auto& pc = detail::continuous(c, 2);
            return std::max(circle_distance(pa.coords[0], pc.coords[0]), circle_distance(pa.coords[1], pc.coords[1]));
        }
        double operator()(const HeisenbergNil&) const {
            const auto& pa = detail::continuous(a, 3);
            const auto& pc = detail::continuous(c, 3);
            if (pa == pc) return 0.0;
            const double ax = pa.coords[0].to_double(), ay = pa.coords[1].to_double(), az = pa.coords[2].to_double();
            const double cx = pc.coords[0].to_double(), cy = pc.coords[1].to_double(), cz = pc.coords[2].to_double();
            double best = std::numeric_limits<double>::infinity();
            for (int i = -1; i <= 1; ++i)
                for (int j = -1; j <= 1; ++j)
                    for (int k = -1; k <= 1; ++k) {
                        // c * (i, j, k) = (cx + i, cy + j, cz + k + cx j)
                        const double dx = ax - (cx + i), dy = ay - (cy + j), dz = az - (cz + k + cx * j);
                        best = std::min(best, std::sqrt(dx * dx + dy * dy + dz * dz));
                    }
            return best;
        }
        double operator()(const IndicatorSubshift&) const {
            const auto& pa = detail::symbolic(a);
            const auto& pc = detail::symbolic(c);
            if (pa == pc) return 0.0;
            if (auto k = first_disagreement(pa, pc)) return 1.0 / static_cast<double>(*k + 1);
            throw WindowExhausted("symbolic points agree on their whole common window");
        }
    };
    return std::visit(V{a, c}, sys);
}

/// distance(a, c) < eps. For symbolic points that agree on the whole common
/// radius R the answer is still decided when 1/(R+2) < eps.
inline bool in_ball(const SystemSpec& sys, const Point& a, const Point& c, double eps) {
    if (!(eps > 0)) throw BadEpsilon("epsilon must be > 0");
    if (std::holds_alternative<IndicatorSubshift>(sys)) {
        const auto& pa = detail::symbolic(a);
        const auto& pc = detail::symbolic(c);
        if (pa == pc) return true;
        if (auto k = first_disagreement(pa, pc)) return 1.0 / static_cast<double>(*k + 1) < eps;
        const std::int64_t R = std::min(pa.radius(), pc.radius());
        if (1.0 / static_cast<double>(R + 2) < eps) return true;
        throw WindowExhausted("ball membership undecidable on the available window");
    }
    return distance(sys, a, c) < eps;
}

} // namespace pwsyn
