#pragma once

#include "polybounds/rational.hpp"

#include <stdexcept>

namespace polybounds {

inline Int factorial(int k) {
    if (k < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int out = 1;
    for (int i = 2; i <= k; ++i)
        out *= i;
    return out;
}

inline Int pow_int(const Int& base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("pow_int: negative exponent");
    Int out = 1;
    Int b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1)
            out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

/// C(n, k); zero outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i; // exact: C(n-k+i, i) is an integer at every step
    }
    return out;
}

/// x(x-1)...(x-d+1); 1 when d == 0.
inline Int falling_factorial(const Int& x, int d) {
    if (d < 0)
        throw std::invalid_argument("falling_factorial: negative step count");
    Int out = 1;
    for (int i = 0; i < d; ++i)
        out *= x - i;
    return out;
}

inline Rational falling_factorial(const Rational& x, int d) {
    if (d < 0)
        throw std::invalid_argument("falling_factorial: negative step count");
    Rational out = 1;
    for (int i = 0; i < d; ++i)
        out *= x - i;
    return out;
}

inline Int falling_factorial(long long x, int d) {
    return falling_factorial(Int(x), d);
}

} // namespace polybounds
