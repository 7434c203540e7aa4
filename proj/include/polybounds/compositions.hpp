#pragma once

#include "polybounds/combinatorics.hpp"
#include "polybounds/multi_index.hpp"

#include <iterator>
#include <stdexcept>

namespace polybounds {

/// |I(n,r)| = C(n+r-1, r).
inline Int composition_count(int n, int r) {
    if (n < 0 || r < 0)
        throw std::invalid_argument("composition_count: negative argument");
    if (n == 0)
        return r == 0 ? 1 : 0;
    return binomial(static_cast<long long>(n) + r - 1, r);
}

namespace detail {

/// In-place successor in canonical (degree-graded reverse-lexicographic
/// descending) order. Returns false at the last composition (0,...,0,r).
inline bool next_composition(MultiIndex& a, int r) {
    const std::size_t n = a.size();
    if (r == 0 || a[n - 1] == static_cast<unsigned>(r))
        return false;
    std::size_t h = 0;
    while (a[h] == 0)
        ++h;
    const unsigned t = a[h];
    a[h] = 0;
    a[0] = t - 1;
    a[h + 1] += 1;
    return true;
}

inline MultiIndex first_composition(int n, int r) {
    MultiIndex a(static_cast<std::size_t>(n));
    a[0] = static_cast<unsigned>(r);
    return a;
}

} // namespace detail

/// Streams every alpha in I(n,r) exactly once, in canonical order, in O(n)
/// space. Usable in range-for.
class CompositionRange {
public:
    CompositionRange(int n, int r) : n_(n), r_(r) {
        if (n < 1)
            throw std::invalid_argument("CompositionRange: n must be >= 1");
        if (r < 0)
            throw std::invalid_argument("CompositionRange: r must be >= 0");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = MultiIndex;
        using difference_type = std::ptrdiff_t;
        using pointer = const MultiIndex*;
        using reference = const MultiIndex&;

        iterator() : r_(0), done_(true) {}

        iterator(int n, int r) : current_(detail::first_composition(n, r)), r_(r), done_(false) {}

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            if (!detail::next_composition(current_, r_))
                done_ = true;
            return *this;
        }

        bool operator==(const iterator& other) const {
            if (done_ != other.done_)
                return false;
            return done_ || current_ == other.current_;
        }

    private:
        MultiIndex current_;
        int r_;
        bool done_;
    };

    iterator begin() const { return iterator(n_, r_); }
    iterator end() const { return iterator(); }

    int variable_count() const { return n_; }
    int total() const { return r_; }
    Int size() const { return composition_count(n_, r_); }

private:
    int n_;
    int r_;
};

/// Position of alpha in the canonical enumeration of I(n,r), counting from 0.
inline Int composition_rank(const MultiIndex& alpha, int r) {
    const std::size_t n = alpha.size();
    if (n == 0 || alpha.degree() != static_cast<std::uint64_t>(r))
        throw std::invalid_argument("composition_rank: |alpha| != r");
    // Canonical order on alpha is ascending lexicographic order on the
    // reversed tuple (alpha_n, ..., alpha_1); rank by counting predecessors.
    Int rank = 0;
    int rem = r;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const unsigned v = alpha[n - 1 - j];
        const int parts_left = static_cast<int>(n) - 1 - static_cast<int>(j);
        for (unsigned w = 0; w < v; ++w)
            rank += composition_count(parts_left, rem - static_cast<int>(w));
        rem -= static_cast<int>(v);
    }
    return rank;
}

/// Inverse of composition_rank.
inline MultiIndex composition_at_rank(int n, int r, Int rank) {
    if (n < 1 || r < 0)
        throw std::invalid_argument("composition_at_rank: bad (n, r)");
    if (rank < 0 || rank >= composition_count(n, r))
        throw std::out_of_range("composition_at_rank: rank out of range");
    MultiIndex alpha(static_cast<std::size_t>(n));
    int rem = r;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j) {
        const int parts_left = n - 1 - static_cast<int>(j);
        unsigned v = 0;
        for (;;) {
            const Int block = composition_count(parts_left, rem - static_cast<int>(v));
            if (rank < block)
                break;
            rank -= block;
            ++v;
        }
        alpha[static_cast<std::size_t>(n) - 1 - j] = v;
        rem -= static_cast<int>(v);
    }
    alpha[0] = static_cast<unsigned>(rem);
    return alpha;
}

} // namespace polybounds
