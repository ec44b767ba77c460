#pragma once

// Exact scalar types shared by every module, plus the textual numeral format
// used by the JSON schemas ("123", "-4", "p/q").

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "error.hpp"

namespace matdioph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }
inline bool is_integer(const BigInt&) { return true; }

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw Error("empty integer numeral '" + std::string(s) + "'");
    BigInt value = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c < '0' || c > '9') throw Error("invalid integer numeral '" + std::string(s) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

inline BigInt parse_bigint(std::string_view s) { return detail::parse_bigint(s); }

/// Parses "k" or "p/q"; the denominator must be nonzero.
inline Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_bigint(s));
    const BigInt num = detail::parse_bigint(s.substr(0, slash));
    const BigInt den = detail::parse_bigint(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

/// Converts to int64 when the value fits, otherwise throws.
inline std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error("integer " + x.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

}  // namespace matdioph
