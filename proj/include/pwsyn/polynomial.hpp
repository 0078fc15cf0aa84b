#pragma once

// Integer-valued polynomials kept in the binomial basis
//     p(n) = sum_k c_k * C(n, k),   c_k in Z,
// which makes integrality at every integer structural. An exact rational
// monomial view is derived once at construction.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pwsyn/errors.hpp"
#include "pwsyn/numeric.hpp"

namespace pwsyn {

/// Generalized binomial C(n, k) for any integer n, k >= 0.
inline BigInt binomial(const BigInt& n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - (i - 1)) / i;  // exact at every step
    return r;
}

class IntegralPolynomial {
public:
    IntegralPolynomial() = default;

    static IntegralPolynomial from_binomial(std::vector<BigInt> coeffs) {
        IntegralPolynomial p;
        p.binom_ = std::move(coeffs);
        p.normalize();
        return p;
    }
    static IntegralPolynomial from_binomial(std::initializer_list<long long> coeffs) {
        std::vector<BigInt> c(coeffs.begin(), coeffs.end());
        return from_binomial(std::move(c));
    }

    /// Monomial coefficients a_0..a_D; throws NotIntegral unless the
    /// polynomial takes integer values at every integer.
    static IntegralPolynomial from_monomial(const std::vector<Rational>& a) {
        // c_k = (Delta^k p)(0) = sum_i (-1)^{k-i} C(k,i) p(i)
        auto value_at = [&](long long x) {
            Rational acc = 0, pw = 1;
            for (const auto& ai : a) {
                acc += ai * pw;
                pw *= x;
            }
            return acc;
        };
        std::vector<BigInt> c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            Rational acc = 0;
            for (std::size_t i = 0; i <= k; ++i) {
                Rational term = value_at(static_cast<long long>(i)) * Rational(binomial(BigInt(k), static_cast<unsigned>(i)));
                acc += ((k - i) % 2 == 0) ? term : -term;
            }
            if (boost::multiprecision::denominator(acc) != 1) throw NotIntegral("polynomial is not integer-valued on Z");
            c[k] = boost::multiprecision::numerator(acc);
        }
        return from_binomial(std::move(c));
    }

    /// n^k.
    static IntegralPolynomial monomial(unsigned k, long long coeff = 1) {
        std::vector<Rational> a(k + 1, Rational(0));
        a[k] = coeff;
        return from_monomial(a);
    }

    /// Parses "[c0,c1,...]" (binomial basis) or a monomial expression such as
    /// "n^2+2n", "3*n - 1", "1/2n^2-1/2n" or "n^2/2 - n/2".
    static IntegralPolynomial parse(std::string_view text);

    const std::vector<BigInt>& binomial_coeffs() const noexcept { return binom_; }
    const std::vector<Rational>& monomial_coeffs() const noexcept { return mono_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(binom_.size()) - 1; }
    bool is_zero() const noexcept { return binom_.empty(); }

    Rational leading() const { return is_zero() ? Rational(0) : mono_.back(); }
    Rational monomial_coeff(int k) const { return (k < 0 || k > degree()) ? Rational(0) : mono_[static_cast<std::size_t>(k)]; }

    BigInt eval(const BigInt& n) const {
        BigInt acc = 0, c = 1;  // c = C(n, k)
        for (std::size_t k = 0; k < binom_.size(); ++k) {
            if (k > 0) c = c * (n - static_cast<long long>(k - 1)) / static_cast<long long>(k);
            acc += binom_[k] * c;
        }
        return acc;
    }
    BigInt eval(std::int64_t n) const { return eval(BigInt(n)); }
    BigInt operator()(std::int64_t n) const { return eval(n); }
    std::int64_t eval_i64(std::int64_t n) const { return to_i64(eval(n)); }

    /// p^{[j]}(n) = p(n + j) - p(j). Vanishes at 0 for every j.
    IntegralPolynomial shift(const BigInt& j) const {
        // Vandermonde: C(n+j, k) = sum_i C(j, k-i) C(n, i)
        const std::size_t D = binom_.size();
        std::vector<BigInt> cj(D);
        for (std::size_t t = 0; t < D; ++t) cj[t] = binomial(j, static_cast<unsigned>(t));
        std::vector<BigInt> out(D, BigInt(0));
        for (std::size_t i = 1; i < D; ++i)
            for (std::size_t k = i; k < D; ++k) out[i] += binom_[k] * cj[k - i];
        return from_binomial(std::move(out));
    }
    IntegralPolynomial shift(std::int64_t j) const { return shift(BigInt(j)); }

    /// Slope a when p(n) = a*n (degree exactly 1 and vanishing at 0).
    std::optional<BigInt> linear_slope() const {
        if (degree() == 1 && binom_[0] == 0) return binom_[1];
        return std::nullopt;
    }

    friend IntegralPolynomial operator-(const IntegralPolynomial& p, const IntegralPolynomial& q) {
        std::vector<BigInt> c(std::max(p.binom_.size(), q.binom_.size()), BigInt(0));
        for (std::size_t k = 0; k < p.binom_.size(); ++k) c[k] += p.binom_[k];
        for (std::size_t k = 0; k < q.binom_.size(); ++k) c[k] -= q.binom_[k];
        return from_binomial(std::move(c));
    }
    friend IntegralPolynomial operator+(const IntegralPolynomial& p, const IntegralPolynomial& q) {
        std::vector<BigInt> c(std::max(p.binom_.size(), q.binom_.size()), BigInt(0));
        for (std::size_t k = 0; k < p.binom_.size(); ++k) c[k] += p.binom_[k];
        for (std::size_t k = 0; k < q.binom_.size(); ++k) c[k] += q.binom_[k];
        return from_binomial(std::move(c));
    }
    friend bool operator==(const IntegralPolynomial& p, const IntegralPolynomial& q) { return p.binom_ == q.binom_; }

    std::string to_binomial_string() const {
        std::string s = "[";
        for (std::size_t k = 0; k < binom_.size(); ++k) s += (k ? "," : "") + binom_[k].str();
        return s + "]";
    }

    std::string to_monomial_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rational& a = mono_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            Rational mag = a < 0 ? Rational(-a) : a;
            if (s.empty()) s += a < 0 ? "-" : "";
            else s += a < 0 ? "-" : "+";
            if (k == 0 || mag != 1) s += pwsyn::to_string(mag);
            if (k >= 1) s += "n";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void normalize() {
        while (!binom_.empty() && binom_.back() == 0) binom_.pop_back();
        // Monomial view: C(n,k) = n(n-1)...(n-k+1)/k!
        mono_.assign(binom_.size(), Rational(0));
        std::vector<BigInt> falling{1};  // coefficients of n(n-1)...(n-k+1)
        BigInt fact = 1;
        for (std::size_t k = 0; k < binom_.size(); ++k) {
            if (k > 0) {
                std::vector<BigInt> next(falling.size() + 1, BigInt(0));
                for (std::size_t i = 0; i < falling.size(); ++i) {
                    next[i + 1] += falling[i];
                    next[i] -= falling[i] * static_cast<long long>(k - 1);
                }
                falling = std::move(next);
                fact *= static_cast<long long>(k);
            }
            for (std::size_t i = 0; i < falling.size(); ++i) mono_[i] += Rational(binom_[k] * falling[i], fact);
        }
    }

    std::vector<BigInt> binom_;
    std::vector<Rational> mono_;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view t) {
        for (char ch : t)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    IntegralPolynomial parse() {
        if (s_.empty()) fail("empty polynomial");
        if (s_.front() == '[') return parse_binomial();
        std::vector<Rational> a;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, power] = term();
            if (a.size() <= power) a.resize(power + 1, Rational(0));
            a[power] += sign * coeff;
        }
        return IntegralPolynomial::from_monomial(a);
    }

private:
    IntegralPolynomial parse_binomial() {
        get();
        std::vector<BigInt> c;
        if (peek() == ']') {
            get();
        } else {
            while (true) {
                int sign = 1;
                if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
                c.push_back(sign * integer());
                const char ch = get();
                if (ch == ']') break;
                if (ch != ',') fail("expected ',' or ']'");
            }
        }
        if (pos_ != s_.size()) fail("trailing characters after ']'");
        return IntegralPolynomial::from_binomial(std::move(c));
    }

    std::pair<Rational, std::size_t> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = fraction();
            have_coeff = true;
            if (peek() == '*') get();
        }
        std::size_t power = 0;
        if (peek() == 'n') {
            get();
            power = 1;
            if (peek() == '^') {
                get();
                power = static_cast<std::size_t>(integer());
            }
            if (peek() == '/') {
                get();
                BigInt d = integer();
                if (d == 0) fail("division by zero");
                coeff /= Rational(d);
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 'n'");
        }
        return {coeff, power};
    }

    Rational fraction() {
        BigInt num = integer();
        if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            get();
            BigInt den = integer();
            if (den == 0) fail("division by zero");
            return Rational(num, den);
        }
        return Rational(num);
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return parse_decimal(std::string_view(s_).substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_++];
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline IntegralPolynomial IntegralPolynomial::parse(std::string_view text) { return detail::PolyParser(text).parse(); }

/// p - q is non-constant, i.e. some binomial coefficient of index >= 1 differs.
inline bool essentially_distinct(const IntegralPolynomial& p, const IntegralPolynomial& q) {
    const auto& a = p.binomial_coeffs();
    const auto& b = q.binomial_coeffs();
    const BigInt zero = 0;
    for (std::size_t k = 1; k < std::max(a.size(), b.size()); ++k)
        if ((k < a.size() ? a[k] : zero) != (k < b.size() ? b[k] : zero)) return true;
    return false;
}

/// The j with q = p^{[j]}, if any. Linear and constant p have every shift
/// equal, so 0 is reported for them. For deg p = D >= 2 the n^{D-1}
/// coefficient of p^{[j]} is a_{D-1} + D a_D j, which pins j.
inline std::optional<BigInt> find_shift(const IntegralPolynomial& p, const IntegralPolynomial& q) {
    if (p.degree() != q.degree()) {
        if (p.degree() <= 0 && q.is_zero()) return BigInt(0);
        return std::nullopt;
    }
    const int D = p.degree();
    if (D <= 1) return p.shift(0) == q ? std::optional<BigInt>(0) : std::nullopt;
    if (p.leading() != q.leading()) return std::nullopt;
    const Rational j = (q.monomial_coeff(D - 1) - p.monomial_coeff(D - 1)) / (Rational(D) * p.leading());
    if (boost::multiprecision::denominator(j) != 1) return std::nullopt;
    const BigInt jj = boost::multiprecision::numerator(j);
    if (p.shift(jj) == q) return jj;
    return std::nullopt;
}

/// (1/|a_{d1}| + 1/|b_{d2}| + 1) * (|a_{d1-1}| + |b_{d2-1}| + 1), the shift
/// separation beyond which p^{[k1]}, p^{[k2]}, q^{[k1]}, q^{[k2]} are pairwise
/// essentially distinct.
inline Rational separation_constant(const IntegralPolynomial& p, const IntegralPolynomial& q) {
    if (p.degree() < 2 || q.degree() < 2) throw DegreeTooLow("separation constant needs degree >= 2");
    if (!essentially_distinct(p, q)) throw BadBound("separation constant needs essentially distinct polynomials");
    auto absr = [](const Rational& r) { return r < 0 ? Rational(-r) : r; };
    const Rational lead = 1 / absr(p.leading()) + 1 / absr(q.leading()) + 1;
    const Rational sub = absr(p.monomial_coeff(p.degree() - 1)) + absr(q.monomial_coeff(q.degree() - 1)) + 1;
    return lead * sub;
}

/// |k1 - k2| >= L without leaving exact arithmetic.
inline bool separated(std::int64_t k1, std::int64_t k2, const Rational& L) {
    const BigInt diff = k1 > k2 ? BigInt(k1) - k2 : BigInt(k2) - k1;
    return diff * boost::multiprecision::denominator(L) >= boost::multiprecision::numerator(L);
}

} // namespace pwsyn
