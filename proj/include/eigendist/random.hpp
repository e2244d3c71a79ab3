#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "eigendist/polynomial.hpp"

namespace eigendist {

/// Seeded random stream. All variate transforms are implemented on top of
/// the raw 64-bit output of mt19937_64 so that identical seeds give
/// bit-identical samples on every platform.
class SeededGenerator {
public:
    explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal N(0, 1) via Box-Muller with a cached spare.
    double normal_std() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - uniform01();  // (0, 1]
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * M_PI * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Complex scalar with Re, Im independent N(0, 1/2); E|z|^2 = 1.
    std::complex<double> complex_normal() {
        const double re = normal_std();
        const double im = normal_std();
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Statistically independent sub-stream seed for worker/system `index`.
std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index);

/// Geometric law with failure probability q conditioned on the support
/// {1, ..., n}: P(k) = q^{k-1}(1-q) / (1-q^n).
struct TruncatedGeometricSpec {
    double q;
    int n;
    std::vector<double> pmf() const;
};

std::complex<double> sample_complex_std_normal(SeededGenerator& gen);

/// System with i.i.d. standard complex normal Bombieri-Weyl coefficients.
HomogeneousSystem sample_weyl_system(int n, int d, SeededGenerator& gen);

/// n x n matrix with i.i.d. standard complex normal entries.
Eigen::MatrixXcd sample_ginibre(int n, SeededGenerator& gen);

/// Exact inverse-CDF sampler over the finite support.
int sample_truncated_geometric(const TruncatedGeometricSpec& spec, SeededGenerator& gen);

/// Bernoulli-trial sampler: run trials with success probability 1-q until
/// the first success at trial l, then fold l into {1..n} mod n. Identical
/// in law to sample_truncated_geometric; kept as an independent route.
int sample_truncated_geometric_modn(double q, int n, SeededGenerator& gen);

/// Fold a trial count l >= 1 into {1..n}: l = n maps to n, l = n+1 to 1.
int fold_trial_to_support(long long l, int n);

/// Sum of dof squared N(0,1) draws; dof must be even and positive.
double sample_chi_square(int dof, SeededGenerator& gen);

/// Same law via the Gamma(k, scale 2) representation: sum of k = dof/2
/// exponentials of rate 1/2. Cross-validated against sample_chi_square.
double sample_chi_square_gamma(int dof, SeededGenerator& gen);

/// Mixture index k: uniform on {1..n} at d = 1, truncated geometric with
/// q = 1/d for d > 1. Real d >= 1 accepted.
int sample_mixture_index(int n, double d, SeededGenerator& gen);

/// |lambda|^2 under the eigenvalue law: draw k, then chi^2_{2k}/2.
double sample_eigenvalue_modulus_sq(int n, double d, SeededGenerator& gen);

/// Full complex eigenvalue draw: modulus from the law, argument uniform.
std::complex<double> sample_eigenvalue(int n, double d, SeededGenerator& gen);

}  // namespace eigendist
