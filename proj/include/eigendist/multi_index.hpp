#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace eigendist {

/// Exponent vector of a monomial in n variables.
struct MultiIndex {
    std::vector<int> exponents;

    int degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
    std::size_t size() const { return exponents.size(); }
    int operator[](std::size_t i) const { return exponents[i]; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.exponents == b.exponents;
    }
};

/// binomial(n-1+d, d): number of degree-d monomials in n variables.
std::size_t multi_index_count(int n, int d);

/// All multi-indices of degree d in n variables, in descending
/// lexicographic order on the exponent tuple, e.g. (2,0),(1,1),(0,2).
/// Deterministic; length multi_index_count(n, d).
std::vector<MultiIndex> enumerate_multi_indices(int n, int d);

/// Multinomial coefficient binom(d, alpha) = d! / prod(alpha_i!).
/// Requires degree(alpha) == d.
double multinomial_coefficient(int d, const MultiIndex& alpha);

/// Position of alpha within enumerate_multi_indices(n, degree(alpha)),
/// or npos if alpha is malformed.
std::size_t multi_index_position(int n, int d, const MultiIndex& alpha);

}  // namespace eigendist
