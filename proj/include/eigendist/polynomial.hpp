#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "eigendist/multi_index.hpp"

namespace eigendist {

using cplx = std::complex<double>;

/// A homogeneous polynomial of degree d in n complex variables.
///
/// Coefficients are stored densely in the monomial basis over the
/// enumeration order of enumerate_multi_indices(n, d). The Bombieri-Weyl
/// coordinates are a per-index rescaling: weyl_a = monomial_c / sqrt(binom(d, alpha)).
/// Immutable after construction apart from coefficient assignment helpers
/// used while building.
class HomogeneousPoly {
public:
    HomogeneousPoly(int n, int d);

    static HomogeneousPoly from_monomial_coeffs(int n, int d, std::vector<cplx> coeffs);
    static HomogeneousPoly from_weyl_coeffs(int n, int d, const std::vector<cplx>& coeffs);

    int num_vars() const { return n_; }
    int degree() const { return d_; }

    const std::vector<MultiIndex>& indices() const { return indices_; }
    const std::vector<cplx>& monomial_coeffs() const { return monomial_; }
    std::vector<cplx> weyl_coeffs() const;

    cplx monomial_coeff(const MultiIndex& alpha) const;
    void set_monomial_coeff(const MultiIndex& alpha, cplx value);

    cplx evaluate(const Eigen::VectorXcd& x) const;
    /// Gradient (partial derivatives with respect to each variable) at x.
    Eigen::VectorXcd gradient(const Eigen::VectorXcd& x) const;

private:
    int n_;
    int d_;
    std::vector<MultiIndex> indices_;
    std::vector<double> weyl_scale_;  // sqrt(binom(d, alpha)) per index
    std::vector<cplx> monomial_;
};

/// System of n homogeneous degree-d polynomials mapping C^n -> C^n.
class HomogeneousSystem {
public:
    HomogeneousSystem() = default;
    explicit HomogeneousSystem(std::vector<HomogeneousPoly> components);

    int num_vars() const;
    int degree() const;
    std::size_t size() const { return components_.size(); }
    const HomogeneousPoly& component(std::size_t i) const { return components_[i]; }
    const std::vector<HomogeneousPoly>& components() const { return components_; }

    Eigen::VectorXcd evaluate(const Eigen::VectorXcd& x) const;
    /// n x n Jacobian of the system map at x.
    Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) const;

private:
    std::vector<HomogeneousPoly> components_;
};

/// Normalized eigenpair candidate: f(v) = lambda * v with ||v|| = 1.
struct EigenPair {
    Eigen::VectorXcd v;
    cplx lambda;
};

/// Hermitian Bombieri-Weyl inner product, summed over components.
/// Throws on (n, d) mismatch.
cplx weyl_inner_product(const HomogeneousSystem& f, const HomogeneousSystem& g);
double weyl_norm(const HomogeneousSystem& f);

/// f(v) - lambda * v.
Eigen::VectorXcd residual_map(const HomogeneousSystem& f, const Eigen::VectorXcd& v, cplx lambda);

/// n x (n+1) derivative of (v, lambda) -> f(v) - lambda v:
/// [ Jf(v) - lambda I | -v ].
Eigen::MatrixXcd jacobian_residual(const HomogeneousSystem& f, const Eigen::VectorXcd& v,
                                   cplx lambda);

/// Conjugation action U.f = U o f o U^{-1} for n = 2, via binomial
/// expansion of the linear substitution. Enough for invariance testing;
/// general-n substitution is deliberately not provided.
HomogeneousSystem unitary_conjugate_2d(const HomogeneousSystem& f, const Eigen::Matrix2cd& U);

}  // namespace eigendist
