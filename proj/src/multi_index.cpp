#include "eigendist/multi_index.hpp"

#include <limits>
#include <stdexcept>

namespace eigendist {

std::size_t multi_index_count(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("multi_index_count: need n >= 1, d >= 0");
    // binom(n-1+d, d) via the multiplicative formula; exact at desk scale.
    std::size_t num = 1;
    for (int i = 1; i <= n - 1; ++i) {
        num = num * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
    }
    return num;
}

namespace {

void enumerate_rec(int n, int d, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (n == 1) {
        prefix.push_back(d);
        out.push_back(MultiIndex{prefix});
        prefix.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_rec(n - 1, d - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("enumerate_multi_indices: need n >= 1, d >= 0");
    std::vector<MultiIndex> out;
    out.reserve(multi_index_count(n, d));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    enumerate_rec(n, d, prefix, out);
    return out;
}

double multinomial_coefficient(int d, const MultiIndex& alpha) {
    if (alpha.degree() != d) throw std::invalid_argument("multinomial_coefficient: degree mismatch");
    // Product of binomials: binom(d, a1) * binom(d-a1, a2) * ...
    double result = 1.0;
    int remaining = d;
    for (int a : alpha.exponents) {
        for (int j = 1; j <= a; ++j) {
            result *= static_cast<double>(remaining - a + j) / static_cast<double>(j);
        }
        remaining -= a;
    }
    return result;
}

std::size_t multi_index_position(int n, int d, const MultiIndex& alpha) {
    if (static_cast<int>(alpha.size()) != n || alpha.degree() != d) {
        return std::numeric_limits<std::size_t>::max();
    }
    for (int a : alpha.exponents) {
        if (a < 0) return std::numeric_limits<std::size_t>::max();
    }
    // Count indices that precede alpha in descending-lex order.
    std::size_t pos = 0;
    int remaining = d;
    for (int i = 0; i < n - 1; ++i) {
        for (int e = remaining; e > alpha[static_cast<std::size_t>(i)]; --e) {
            pos += multi_index_count(n - 1 - i, remaining - e);
        }
        remaining -= alpha[static_cast<std::size_t>(i)];
    }
    return pos;
}

}  // namespace eigendist
