#pragma once

#include "polybounds/combinatorics.hpp"
#include "polybounds/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polybounds {

/// Exponent vector in N^n. Indexes monomials and, scaled by 1/r, grid points.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::size_t n) : entries_(n, 0) {}

    MultiIndex(std::initializer_list<unsigned> init) : entries_(init) {}

    explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }

    unsigned operator[](std::size_t i) const { return entries_[i]; }
    unsigned& operator[](std::size_t i) { return entries_[i]; }

    std::uint64_t degree() const {
        return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
    }

    const std::vector<unsigned>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<unsigned> entries_;
};

/// Canonical term order: higher total degree first, ties broken reverse-
/// lexicographically (at the last differing entry, the smaller entry wins).
/// On a fixed degree this runs (r,0,...,0), ..., (0,...,0,r).
struct CanonicalTermOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db)
            return da > db;
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i])
                return a[i] < b[i];
        }
        return false;
    }
};

inline bool canonical_precedes(const MultiIndex& a, const MultiIndex& b) {
    return CanonicalTermOrder{}(a, b);
}

inline std::string to_string(const MultiIndex& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a[i]);
    }
    out += ')';
    return out;
}

/// alpha! = prod_i alpha_i!
inline Int multi_factorial(const MultiIndex& a) {
    Int out = 1;
    for (unsigned e : a)
        out *= factorial(static_cast<int>(e));
    return out;
}

/// r!/alpha!, the multinomial coefficient; requires |alpha| = r.
inline Int multinomial(int r, const MultiIndex& a) {
    if (a.degree() != static_cast<std::uint64_t>(r))
        throw std::invalid_argument("multinomial: |alpha| != r");
    return factorial(r) / multi_factorial(a);
}

inline void require_same_length(const MultiIndex& a, const MultiIndex& b, const char* who) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

/// alpha^(beta-falling) = prod_i alpha_i(alpha_i-1)...(alpha_i-beta_i+1).
/// Zero whenever some alpha_i < beta_i.
inline Int multi_falling_factorial(const MultiIndex& alpha, const MultiIndex& beta) {
    require_same_length(alpha, beta, "multi_falling_factorial");
    Int out = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < beta[i])
            return 0;
        out *= falling_factorial(Int(alpha[i]), static_cast<int>(beta[i]));
    }
    return out;
}

/// Falling-factorial power of an arbitrary integer vector (entries may be negative).
inline Int multi_falling_factorial(const std::vector<Int>& x, const MultiIndex& beta) {
    if (x.size() != beta.size())
        throw std::invalid_argument("multi_falling_factorial: dimension mismatch");
    Int out = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        out *= falling_factorial(x[i], static_cast<int>(beta[i]));
    return out;
}

/// alpha^beta over the integers.
inline Int monomial_power(const MultiIndex& alpha, const MultiIndex& beta) {
    require_same_length(alpha, beta, "monomial_power");
    Int out = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        out *= pow_int(Int(alpha[i]), static_cast<int>(beta[i]));
    return out;
}

/// x^beta at a rational point.
inline Rational monomial_power(const std::vector<Rational>& x, const MultiIndex& beta) {
    if (x.size() != beta.size())
        throw std::invalid_argument("monomial_power: dimension mismatch");
    Rational out = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (unsigned e = 0; e < beta[i]; ++e)
            out *= x[i];
    return out;
}

} // namespace polybounds
