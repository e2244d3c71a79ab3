#pragma once

#include <complex>
#include <vector>

namespace eigendist {

/// Univariate complex polynomial, coefficients in ascending degree.
/// Construction trims trailing coefficients below 1e-13 * max|coeff|.
class ComplexPolynomial1D {
public:
    explicit ComplexPolynomial1D(std::vector<std::complex<double>> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }

    std::complex<double> evaluate(std::complex<double> z) const;
    std::complex<double> derivative_at(std::complex<double> z) const;

    /// sum_k |c_k| |z|^k, the natural scale for backward-error tests.
    double evaluation_scale(std::complex<double> z) const;

private:
    std::vector<std::complex<double>> coeffs_;
};

/// All complex roots with multiplicity, via Aberth-Ehrlich simultaneous
/// iteration with deterministic perturbation restarts on stall.
/// Throws std::invalid_argument on degree-0 input and std::runtime_error
/// if the iteration fails to converge after all restarts.
std::vector<std::complex<double>> roots_univariate(const ComplexPolynomial1D& p);

}  // namespace eigendist
