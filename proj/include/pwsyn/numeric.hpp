#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "pwsyn/errors.hpp"

namespace pwsyn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Working precision for irrational parameters.
inline constexpr unsigned real_mantissa_bits = 192;

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<real_mantissa_bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw BadBound("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

/// Base-10 integer with an optional sign. cpp_int's own string constructor
/// would read "010" as octal and accept "0x10".
inline BigInt parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ParseError("expected a decimal integer, got '" + std::string(text) + "'");
    BigInt v = 0;
    for (; pos < text.size(); ++pos) {
        if (text[pos] < '0' || text[pos] > '9') throw ParseError("expected a decimal integer, got '" + std::string(text) + "'");
        v = v * 10 + (text[pos] - '0');
    }
    return neg ? BigInt(-v) : v;
}

/// floor(a / b) for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline std::string to_string(const Rational& r) {
    const auto& d = boost::multiprecision::denominator(r);
    if (d == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + d.str();
}

} // namespace pwsyn
