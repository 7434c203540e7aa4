#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace polybounds {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error on a zero denominator.
inline Rational make_rational(Int num, Int den) {
    if (den.is_zero())
        throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Int numerator_of(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Int denominator_of(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

/// Parses "p", "-p", "p/q" or "-p/q" with q a positive integer literal.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument("rational literal '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto digits = [&]() -> Int {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected digits");
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value *= 10;
            value += text[pos] - '0';
            ++pos;
        }
        return value;
    };
    Int num = digits();
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den.is_zero())
            fail("zero denominator");
    }
    if (pos != text.size())
        fail("trailing characters");
    if (negative)
        num = -num;
    return make_rational(std::move(num), std::move(den));
}

/// Canonical exact form: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& q) {
    return q.str();
}

/// Six-significant-digit decimal approximation, for human-readable tables only.
inline std::string approx_decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", q.convert_to<double>());
    return buf;
}

/// Largest integer <= q. Denominators are positive by construction.
inline Int floor_rational(const Rational& q) {
    Int num = numerator_of(q);
    Int den = denominator_of(q);
    if (num >= 0)
        return num / den;
    return -((-num + den - 1) / den);
}

/// Smallest integer >= q.
inline Int ceil_rational(const Rational& q) {
    return -floor_rational(-q);
}

} // namespace polybounds
