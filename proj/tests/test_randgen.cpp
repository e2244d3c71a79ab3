#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eigendist/density.hpp"
#include "eigendist/random.hpp"
#include "eigendist/stats.hpp"

using namespace eigendist;

TEST_CASE("identical seeds give bit-identical streams") {
    SeededGenerator a(123456789), b(123456789);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniform01() == b.uniform01());
        CHECK(a.normal_std() == b.normal_std());
        CHECK(a.complex_normal() == b.complex_normal());
    }
    SeededGenerator c(1), d(2);
    bool identical = true;
    for (int i = 0; i < 16; ++i) identical = identical && (c.uniform01() == d.uniform01());
    CHECK_FALSE(identical);
}

TEST_CASE("complex standard normal moments") {
    SeededGenerator gen(31);
    const int N = 1000000;
    double sum_modsq = 0.0, sum_re = 0.0, sum_im = 0.0, sum_re_sq = 0.0;
    for (int i = 0; i < N; ++i) {
        const cplx z = sample_complex_std_normal(gen);
        sum_modsq += std::norm(z);
        sum_re += z.real();
        sum_im += z.imag();
        sum_re_sq += z.real() * z.real();
    }
    CHECK(sum_modsq / N == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(sum_re / N) < 3.0 / std::sqrt(static_cast<double>(N)));
    CHECK(std::abs(sum_im / N) < 3.0 / std::sqrt(static_cast<double>(N)));
    CHECK(sum_re_sq / N == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("Weyl system: squared norm has mean n * binom(n-1+d, d)") {
    SeededGenerator gen(37);
    const int N = 10000;
    std::vector<double> norms_sq(N);
    for (int i = 0; i < N; ++i) {
        const HomogeneousSystem f = sample_weyl_system(2, 2, gen);
        const double nn = weyl_norm(f);
        norms_sq[static_cast<std::size_t>(i)] = nn * nn;
    }
    double mean = 0.0, var = 0.0;
    for (double x : norms_sq) mean += x;
    mean /= N;
    for (double x : norms_sq) var += (x - mean) * (x - mean);
    var /= (N - 1);
    const double se = std::sqrt(var / N);
    CHECK(std::abs(mean - 6.0) < 3.0 * se);  // n * k = 2 * 3
}

TEST_CASE("Weyl system at (1,1) is a single complex normal coefficient") {
    SeededGenerator a(41), b(41);
    const HomogeneousSystem f = sample_weyl_system(1, 1, a);
    CHECK(f.component(0).monomial_coeffs()[0] == sample_complex_std_normal(b));
}

TEST_CASE("monomial coefficient variance carries the binomial scaling") {
    // Var of the X1X2 monomial coefficient is binom(2,(1,1)) = 2 times the
    // X1^2 one.
    SeededGenerator gen(43);
    const int N = 20000;
    double var_cross = 0.0, var_pure = 0.0;
    for (int i = 0; i < N; ++i) {
        const HomogeneousSystem f = sample_weyl_system(2, 2, gen);
        var_cross += std::norm(f.component(0).monomial_coeff(MultiIndex{{1, 1}}));
        var_pure += std::norm(f.component(0).monomial_coeff(MultiIndex{{2, 0}}));
    }
    CHECK(var_cross / var_pure == doctest::Approx(2.0).epsilon(0.06));
}

TEST_CASE("Ginibre matrix moments and the d = 1 reduction") {
    SeededGenerator gen(47);
    const int N = 10000;
    std::vector<double> frob_sq(N);
    for (int i = 0; i < N; ++i) {
        frob_sq[static_cast<std::size_t>(i)] = sample_ginibre(3, gen).squaredNorm();
    }
    double mean = 0.0, var = 0.0;
    for (double x : frob_sq) mean += x;
    mean /= N;
    for (double x : frob_sq) var += (x - mean) * (x - mean);
    var /= (N - 1);
    CHECK(std::abs(mean - 9.0) < 3.0 * std::sqrt(var / N));

    SeededGenerator a(53), b(53);
    CHECK(sample_ginibre(1, a)(0, 0) == sample_complex_std_normal(b));

    // d = 1 Weyl coefficients and Ginibre entries are the same draws in the
    // same order: e_alpha = X_j at degree one.
    SeededGenerator c(59), e(59);
    const Eigen::MatrixXcd A = sample_ginibre(3, c);
    const HomogeneousSystem f = sample_weyl_system(3, 1, e);
    for (int i = 0; i < 3; ++i) {
        const std::vector<cplx> row = f.component(static_cast<std::size_t>(i)).weyl_coeffs();
        for (int j = 0; j < 3; ++j) CHECK(A(i, j) == row[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("truncated geometric: masses, degenerate case, mean") {
    const TruncatedGeometricSpec spec{0.5, 2};
    const std::vector<double> pmf = spec.pmf();
    CHECK(pmf[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(pmf[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    SeededGenerator gen(61);
    const int N = 100000;
    long count1 = 0;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        const int k = sample_truncated_geometric(spec, gen);
        if (k == 1) ++count1;
        sum += k;
    }
    const double p1 = static_cast<double>(count1) / N;
    const double se1 = std::sqrt(pmf[0] * (1 - pmf[0]) / N);
    CHECK(std::abs(p1 - 2.0 / 3.0) < 3.0 * se1);
    // Mean 4/3 from the closed form; SE of the mean of a {1,2} variable.
    const double se_mean = std::sqrt((2.0 / 9.0) / N);
    CHECK(std::abs(sum / N - 4.0 / 3.0) < 3.0 * se_mean);
    CHECK(truncated_geometric_mean(0.5, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    SeededGenerator gen2(67);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_truncated_geometric(TruncatedGeometricSpec{0.0, 5}, gen2) == 1);
    }
}

TEST_CASE("pmf sums to one, including real d") {
    for (double q : {0.5, 1.0 / 3.0, 0.9, 0.123456}) {
        for (int n : {1, 2, 5, 17}) {
            const std::vector<double> pmf = TruncatedGeometricSpec{q, n}.pmf();
            double sum = 0.0;
            for (double p : pmf) sum += p;
            CHECK(std::abs(sum - 1.0) <= 1e-14);
        }
    }
}

TEST_CASE("mod-n folding convention") {
    CHECK(fold_trial_to_support(1, 4) == 1);
    CHECK(fold_trial_to_support(4, 4) == 4);   // l = n stays n, not 0
    CHECK(fold_trial_to_support(5, 4) == 1);   // l = n + 1 wraps to 1
    CHECK(fold_trial_to_support(8, 4) == 4);
    CHECK(fold_trial_to_support(9, 4) == 1);
}

TEST_CASE("mod-n sampler agrees with the truncated masses (chi-square GOF)") {
    const int N = 100000;
    for (const auto& [q, n] : std::vector<std::pair<double, int>>{{0.5, 2}, {1.0 / 3.0, 5}, {0.9, 4}}) {
        SeededGenerator gen(71 + n);
        std::vector<long> counts(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < N; ++i) {
            ++counts[static_cast<std::size_t>(sample_truncated_geometric_modn(q, n, gen) - 1)];
        }
        const double stat = chi_square_gof_statistic(counts, TruncatedGeometricSpec{q, n}.pmf());
        CHECK(stat < chi_square_critical_1pct(n - 1));
    }
}

TEST_CASE("both truncated-geometric samplers pass GOF against theory") {
    const int N = 100000;
    for (const auto& [q, n] : std::vector<std::pair<double, int>>{{0.5, 2}, {1.0 / 3.0, 5}, {0.9, 4}}) {
        SeededGenerator gen(401 + n);
        const TruncatedGeometricSpec spec{q, n};
        std::vector<long> counts(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < N; ++i) {
            ++counts[static_cast<std::size_t>(sample_truncated_geometric(spec, gen) - 1)];
        }
        CHECK(chi_square_gof_statistic(counts, spec.pmf()) < chi_square_critical_1pct(n - 1));
    }
}

TEST_CASE("chi-square sampler: mean and the k = 1 exponential identity") {
    SeededGenerator gen(79);
    const int N = 100000;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += sample_chi_square(6, gen);
    // Var of chi^2_6 is 12.
    CHECK(std::abs(sum / N - 6.0) < 3.0 * std::sqrt(12.0 / N));

    // Median of chi^2_2 = Exp(1/2) is 2 ln 2.
    SeededGenerator gen2(83);
    long below = 0;
    for (int i = 0; i < N; ++i) {
        if (sample_chi_square(2, gen2) <= 2.0 * std::log(2.0)) ++below;
    }
    const double frac = static_cast<double>(below) / N;
    CHECK(std::abs(frac - 0.5) < 3.0 * std::sqrt(0.25 / N));
}

namespace {

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double stat = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        stat = std::max(stat, std::abs(static_cast<double>(i) / a.size() -
                                       static_cast<double>(j) / b.size()));
    }
    return stat;
}

}  // namespace

TEST_CASE("literal and gamma-path chi-square samplers agree (two-sample KS)") {
    SeededGenerator gen(89);
    const std::size_t N = 50000;
    for (int dof : {2, 6}) {
        std::vector<double> literal(N), gamma(N);
        for (std::size_t i = 0; i < N; ++i) literal[i] = sample_chi_square(dof, gen);
        for (std::size_t i = 0; i < N; ++i) gamma[i] = sample_chi_square_gamma(dof, gen);
        const double stat = two_sample_ks(literal, gamma);
        // 1% two-sample critical: 1.63 sqrt((n+m)/(nm)).
        const double critical = 1.63 * std::sqrt(2.0 / static_cast<double>(N));
        CHECK(stat < critical);
        // One-sample check against the closed-form CDF as well.
        CHECK(ks_statistic(literal, [&](double x) { return chi_square_cdf_even(dof, x); }) <
              1.63 / std::sqrt(static_cast<double>(N)));
    }
}

TEST_CASE("mixture index sampler is uniform at d = 1") {
    SeededGenerator gen(97);
    const int N = 100000, n = 5;
    std::vector<long> counts(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < N; ++i) ++counts[static_cast<std::size_t>(sample_mixture_index(n, 1.0, gen) - 1)];
    const double se = std::sqrt((1.0 / n) * (1.0 - 1.0 / n) / N);
    for (long c : counts) {
        CHECK(std::abs(static_cast<double>(c) / N - 1.0 / n) < 3.0 * se);
    }
}

TEST_CASE("eigenvalue modulus-squared sampler: means and GOF") {
    SeededGenerator gen(101);
    const int N = 100000;

    // n = 1, d = 1 is Exp(1).
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += sample_eigenvalue_modulus_sq(1, 1.0, gen);
    CHECK(std::abs(sum / N - 1.0) < 3.0 / std::sqrt(static_cast<double>(N)));

    // n = 2, d = 2 has mean 4/3.
    std::vector<double> R(static_cast<std::size_t>(N));
    double sum22 = 0.0, var22 = 0.0;
    for (int i = 0; i < N; ++i) {
        const double x = sample_eigenvalue_modulus_sq(2, 2.0, gen);
        R[static_cast<std::size_t>(i)] = 2.0 * x;
        sum22 += x;
    }
    const double mean22 = sum22 / N;
    for (double Ri : R) var22 += (0.5 * Ri - mean22) * (0.5 * Ri - mean22);
    var22 /= (N - 1);
    CHECK(std::abs(mean22 - 4.0 / 3.0) < 3.0 * std::sqrt(var22 / N));

    // KS of R = 2|lambda|^2 against the mixture CDF.
    const DistributionParams params{2, 2.0};
    CHECK(ks_statistic(R, [&](double x) { return mixture_cdf(params, x); }) <
          1.63 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("sampler mean matches the closed form on the (n,d) grid") {
    const int N = 50000;
    for (int n = 1; n <= 5; ++n) {
        for (int d = 1; d <= 5; ++d) {
            SeededGenerator gen(derive_stream_seed(103, static_cast<std::uint64_t>(16 * n + d)));
            double sum = 0.0, sum_sq = 0.0;
            for (int i = 0; i < N; ++i) {
                const double x = sample_eigenvalue_modulus_sq(n, static_cast<double>(d), gen);
                sum += x;
                sum_sq += x * x;
            }
            const double mean = sum / N;
            const double var = (sum_sq - N * mean * mean) / (N - 1);
            const double expected = expectation_modulus_sq({n, static_cast<double>(d)});
            CHECK(std::abs(mean - expected) < 3.0 * std::sqrt(var / N));
        }
    }
}

TEST_CASE("full eigenvalue draw: centered, right modulus, uniform argument") {
    SeededGenerator gen(107);
    const int N = 100000;
    double sum_re = 0.0, sum_im = 0.0, sum_modsq = 0.0, sum_modsq_sq = 0.0;
    std::vector<long> arg_bins(36, 0);
    for (int i = 0; i < N; ++i) {
        const cplx lambda = sample_eigenvalue(3, 2.0, gen);
        sum_re += lambda.real();
        sum_im += lambda.imag();
        const double m = std::norm(lambda);
        sum_modsq += m;
        sum_modsq_sq += m * m;
        double arg = std::arg(lambda);
        if (arg < 0) arg += 2.0 * M_PI;
        int bin = static_cast<int>(arg / (2.0 * M_PI) * 36.0);
        if (bin > 35) bin = 35;
        ++arg_bins[static_cast<std::size_t>(bin)];
    }
    const double expected = expectation_modulus_sq({3, 2.0});
    const double mean = sum_modsq / N;
    const double var = (sum_modsq_sq - N * mean * mean) / (N - 1);
    CHECK(std::abs(mean - expected) < 3.0 * std::sqrt(var / N));
    // |Re lambda| <= |lambda| with E|lambda|^2 ~ 1.5; crude 3-sigma bound.
    CHECK(std::abs(sum_re / N) < 3.0 * std::sqrt(expected / N));
    CHECK(std::abs(sum_im / N) < 3.0 * std::sqrt(expected / N));

    const std::vector<double> uniform_probs(36, 1.0 / 36.0);
    CHECK(chi_square_gof_statistic(arg_bins, uniform_probs) < chi_square_critical_1pct(35));
}
