#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eigendist/random.hpp"
#include "eigendist/roots.hpp"

using namespace eigendist;
using cd = std::complex<double>;

namespace {

bool contains_root(const std::vector<cd>& roots, cd target, double tol = 1e-10) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](cd r) { return std::abs(r - target) < tol; });
}

}  // namespace

TEST_CASE("simple polynomials") {
    // z^2 - 1
    const auto r1 = roots_univariate(ComplexPolynomial1D({cd(-1), cd(0), cd(1)}));
    REQUIRE(r1.size() == 2);
    CHECK(contains_root(r1, cd(1)));
    CHECK(contains_root(r1, cd(-1)));

    // z (1 - z): exact zero constant term is factored out.
    const auto r2 = roots_univariate(ComplexPolynomial1D({cd(0), cd(1), cd(-1)}));
    REQUIRE(r2.size() == 2);
    CHECK(contains_root(r2, cd(0)));
    CHECK(contains_root(r2, cd(1)));
}

TEST_CASE("degree-0 input and trailing-zero trimming") {
    CHECK_THROWS_AS((void)roots_univariate(ComplexPolynomial1D({cd(3)})), std::invalid_argument);
    // Trailing near-zero coefficients are trimmed at construction.
    const ComplexPolynomial1D p({cd(-1), cd(1), cd(0, 1e-18)});
    CHECK(p.degree() == 1);
    const auto r = roots_univariate(p);
    REQUIRE(r.size() == 1);
    CHECK(contains_root(r, cd(1)));
}

TEST_CASE("random degree-8 polynomials: Vieta sum and residuals") {
    SeededGenerator gen(211);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<cd> coeffs(9);
        for (cd& c : coeffs) c = gen.complex_normal();
        const ComplexPolynomial1D p(coeffs);
        if (p.degree() != 8) continue;
        const auto roots = roots_univariate(p);
        REQUIRE(roots.size() == 8);
        cd sum(0, 0);
        for (cd r : roots) sum += r;
        CHECK(std::abs(sum + coeffs[7] / coeffs[8]) < 1e-8);
        for (cd r : roots) {
            CHECK(std::abs(p.evaluate(r)) <= 1e-10 * p.evaluation_scale(r));
        }
    }
}

TEST_CASE("roots of unity at degree 12") {
    // z^12 - 1: all 12th roots of unity.
    std::vector<cd> coeffs(13, cd(0));
    coeffs[0] = cd(-1);
    coeffs[12] = cd(1);
    const auto roots = roots_univariate(ComplexPolynomial1D(coeffs));
    REQUIRE(roots.size() == 12);
    for (int k = 0; k < 12; ++k) {
        CHECK(contains_root(roots, std::polar(1.0, 2.0 * M_PI * k / 12.0), 1e-9));
    }
}

TEST_CASE("clustered roots still certify small backward error") {
    // (z - 1)^2 (z + 2) has a double root; accept sqrt(eps)-level accuracy
    // but demand a small residual scale.
    const ComplexPolynomial1D p({cd(2), cd(-3), cd(0), cd(1)});
    const auto roots = roots_univariate(p);
    REQUIRE(roots.size() == 3);
    CHECK(contains_root(roots, cd(-2), 1e-9));
    int near_one = 0;
    for (cd r : roots) {
        if (std::abs(r - cd(1)) < 1e-6) ++near_one;
    }
    CHECK(near_one == 2);
}
