#pragma once

// Exact rational scalars. Everything in the library is computed over Q.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsuper {

/// Arbitrary-precision rational; GMP keeps every value in reduced form with a
/// positive denominator.
using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string to_string(const Scalar& s) {
    const Integer num = boost::multiprecision::numerator(s);
    const Integer den = boost::multiprecision::denominator(s);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') pos = 1;
    if (pos == text.size()) return false;
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = Integer(std::string(text[0] == '+' ? text.substr(1) : text));
    return true;
}

}  // namespace detail

/// Parses "p" or "p/q". Non-reduced input is normalized; q = 0 is rejected.
inline Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    Integer num, den = 1;
    const bool ok = slash == std::string_view::npos
                        ? detail::parse_integer(text, num)
                        : detail::parse_integer(text.substr(0, slash), num) &&
                              detail::parse_integer(text.substr(slash + 1), den);
    if (!ok) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Scalar(num, den);
}

/// (-1)^e
constexpr int sign_of(unsigned e) { return (e & 1U) ? -1 : 1; }

}  // namespace qsuper
