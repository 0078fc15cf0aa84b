#pragma once

#include <cctype>
#include <ios>
#include <string>
#include <string_view>
#include <variant>

#include <boost/math/constants/constants.hpp>

#include "pwsyn/errors.hpp"
#include "pwsyn/numeric.hpp"

namespace pwsyn {

/// A real number that stays an exact rational until it meets an irrational
/// operand, after which it is carried at Real precision.
class Angle {
public:
    Angle() : v_(Rational(0)) {}
    Angle(Rational r) : v_(std::move(r)) {}
    Angle(Real r) : v_(std::move(r)) {}
    Angle(long long i) : v_(Rational(i)) {}
    Angle(int i) : v_(Rational(i)) {}

    bool exact() const noexcept { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }

    Real to_real() const {
        if (const auto* r = std::get_if<Rational>(&v_))
            return Real(boost::multiprecision::numerator(*r)) / Real(boost::multiprecision::denominator(*r));
        return std::get<Real>(v_);
    }
    double to_double() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return r->convert_to<double>();
        return std::get<Real>(v_).convert_to<double>();
    }

    Angle floor() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return Angle(Rational(floor_rational(*r)));
        return Angle(Real(boost::multiprecision::floor(std::get<Real>(v_))));
    }
    /// Representative in [0, 1).
    Angle frac() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return Angle(Rational(*r - Rational(floor_rational(*r))));
        const Real& x = std::get<Real>(v_);
        return Angle(Real(x - boost::multiprecision::floor(x)));
    }

    friend Angle operator+(const Angle& a, const Angle& b) {
        if (a.exact() && b.exact()) return Angle(Rational(a.rational() + b.rational()));
        return Angle(Real(a.to_real() + b.to_real()));
    }
    friend Angle operator-(const Angle& a, const Angle& b) {
        if (a.exact() && b.exact()) return Angle(Rational(a.rational() - b.rational()));
        return Angle(Real(a.to_real() - b.to_real()));
    }
    friend Angle operator*(const Angle& a, const Angle& b) {
        if (a.exact() && b.exact()) return Angle(Rational(a.rational() * b.rational()));
        return Angle(Real(a.to_real() * b.to_real()));
    }
    friend Angle operator*(const BigInt& n, const Angle& a) {
        if (a.exact()) return Angle(Rational(Rational(n) * a.rational()));
        return Angle(Real(Real(n) * std::get<Real>(a.v_)));
    }
    Angle operator-() const {
        if (exact()) return Angle(Rational(-rational()));
        return Angle(Real(-std::get<Real>(v_)));
    }

    friend bool operator==(const Angle& a, const Angle& b) {
        if (a.exact() && b.exact()) return a.rational() == b.rational();
        return a.to_real() == b.to_real();
    }
    friend bool operator<(const Angle& a, const Angle& b) {
        if (a.exact() && b.exact()) return a.rational() < b.rational();
        return a.to_real() < b.to_real();
    }

    std::string str() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return pwsyn::to_string(*r);
        return std::get<Real>(v_).str(40, std::ios_base::fixed);
    }

private:
    std::variant<Rational, Real> v_;
};

/// Circle distance |a - b| mod 1, in [0, 1/2].
inline double circle_distance(const Angle& a, const Angle& b) {
    const Angle d = (a - b).frac();
    if (d.exact()) {
        const Rational& r = d.rational();
        return (r > Rational(1, 2) ? Rational(1 - r) : r).convert_to<double>();
    }
    const Real x = d.to_real();
    return (x > Real(0.5) ? Real(1 - x) : x).convert_to<double>();
}

inline Angle named_constant(std::string_view name) {
    using boost::math::constants::pi;
    if (name == "sqrt2") return Angle(Real(boost::multiprecision::sqrt(Real(2))));
    if (name == "sqrt3") return Angle(Real(boost::multiprecision::sqrt(Real(3))));
    if (name == "sqrt5") return Angle(Real(boost::multiprecision::sqrt(Real(5))));
    if (name == "golden") return Angle(Real((1 + boost::multiprecision::sqrt(Real(5))) / 2));
    if (name == "e") return Angle(Real(boost::multiprecision::exp(Real(1))));
    if (name == "pi") return Angle(Real(pi<Real>()));
    throw ParseError("unknown constant '" + std::string(name) + "'");
}

/// Parses sums of terms, each a rational ("3", "1/4") or an optionally scaled
/// named constant ("sqrt2", "2*pi", "1/2*sqrt5"). Names: sqrt2, sqrt3, sqrt5,
/// golden, e, pi.
inline Angle parse_angle(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty constant expression");
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg + " in constant '" + s + "'"); };
    auto digits = [&]() {
        const std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) fail("expected digits");
        return parse_decimal(std::string_view(s).substr(st, pos - st));
    };
    Angle acc(0);
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Angle term(1);
        bool have_number = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            BigInt num = digits();
            BigInt den = 1;
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                const std::size_t st = pos;
                BigInt frac_digits = digits();
                for (std::size_t k = st; k < pos; ++k) {
                    num *= 10;
                    den *= 10;
                }
                num += frac_digits;
            }
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den *= digits();
                if (den == 0) fail("division by zero");
            }
            term = Angle(Rational(num, den));
            have_number = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            const std::size_t st = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            term = term * named_constant(s.substr(st, pos - st));
        } else if (!have_number) {
            fail("expected a number or a constant name");
        }
        acc = sign > 0 ? acc + term : acc - term;
    }
    return acc;
}

} // namespace pwsyn
