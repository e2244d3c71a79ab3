#include "eigendist/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace eigendist {

HomogeneousPoly::HomogeneousPoly(int n, int d)
    : n_(n), d_(d), indices_(enumerate_multi_indices(n, d)) {
    weyl_scale_.reserve(indices_.size());
    for (const MultiIndex& alpha : indices_) {
        weyl_scale_.push_back(std::sqrt(multinomial_coefficient(d, alpha)));
    }
    monomial_.assign(indices_.size(), cplx(0.0, 0.0));
}

HomogeneousPoly HomogeneousPoly::from_monomial_coeffs(int n, int d, std::vector<cplx> coeffs) {
    HomogeneousPoly p(n, d);
    if (coeffs.size() != p.indices_.size()) {
        throw std::invalid_argument("from_monomial_coeffs: coefficient count mismatch");
    }
    p.monomial_ = std::move(coeffs);
    return p;
}

HomogeneousPoly HomogeneousPoly::from_weyl_coeffs(int n, int d, const std::vector<cplx>& coeffs) {
    HomogeneousPoly p(n, d);
    if (coeffs.size() != p.indices_.size()) {
        throw std::invalid_argument("from_weyl_coeffs: coefficient count mismatch");
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        p.monomial_[i] = coeffs[i] * p.weyl_scale_[i];
    }
    return p;
}

std::vector<cplx> HomogeneousPoly::weyl_coeffs() const {
    std::vector<cplx> out(monomial_.size());
    for (std::size_t i = 0; i < monomial_.size(); ++i) {
        out[i] = monomial_[i] / weyl_scale_[i];
    }
    return out;
}

cplx HomogeneousPoly::monomial_coeff(const MultiIndex& alpha) const {
    std::size_t pos = multi_index_position(n_, d_, alpha);
    if (pos >= monomial_.size()) throw std::invalid_argument("monomial_coeff: bad multi-index");
    return monomial_[pos];
}

void HomogeneousPoly::set_monomial_coeff(const MultiIndex& alpha, cplx value) {
    std::size_t pos = multi_index_position(n_, d_, alpha);
    if (pos >= monomial_.size()) throw std::invalid_argument("set_monomial_coeff: bad multi-index");
    monomial_[pos] = value;
}

namespace {

// powers[i * (d+1) + e] = x_i^e
std::vector<cplx> power_table(const Eigen::VectorXcd& x, int d) {
    const int n = static_cast<int>(x.size());
    std::vector<cplx> powers(static_cast<std::size_t>(n) * (d + 1));
    for (int i = 0; i < n; ++i) {
        cplx p(1.0, 0.0);
        for (int e = 0; e <= d; ++e) {
            powers[static_cast<std::size_t>(i) * (d + 1) + e] = p;
            p *= x(i);
        }
    }
    return powers;
}

}  // namespace

cplx HomogeneousPoly::evaluate(const Eigen::VectorXcd& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluate: length mismatch");
    const std::vector<cplx> powers = power_table(x, d_);
    cplx sum(0.0, 0.0);
    for (std::size_t idx = 0; idx < indices_.size(); ++idx) {
        if (monomial_[idx] == cplx(0.0, 0.0)) continue;
        cplx term = monomial_[idx];
        const MultiIndex& alpha = indices_[idx];
        for (int i = 0; i < n_; ++i) {
            term *= powers[static_cast<std::size_t>(i) * (d_ + 1) + alpha[static_cast<std::size_t>(i)]];
        }
        sum += term;
    }
    return sum;
}

Eigen::VectorXcd HomogeneousPoly::gradient(const Eigen::VectorXcd& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("gradient: length mismatch");
    const std::vector<cplx> powers = power_table(x, d_);
    Eigen::VectorXcd grad = Eigen::VectorXcd::Zero(n_);
    for (std::size_t idx = 0; idx < indices_.size(); ++idx) {
        if (monomial_[idx] == cplx(0.0, 0.0)) continue;
        const MultiIndex& alpha = indices_[idx];
        for (int j = 0; j < n_; ++j) {
            const int aj = alpha[static_cast<std::size_t>(j)];
            if (aj == 0) continue;
            cplx term = monomial_[idx] * static_cast<double>(aj);
            for (int i = 0; i < n_; ++i) {
                int e = alpha[static_cast<std::size_t>(i)];
                if (i == j) e -= 1;
                term *= powers[static_cast<std::size_t>(i) * (d_ + 1) + e];
            }
            grad(j) += term;
        }
    }
    return grad;
}

HomogeneousSystem::HomogeneousSystem(std::vector<HomogeneousPoly> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("HomogeneousSystem: empty");
    const int n = components_[0].num_vars();
    const int d = components_[0].degree();
    if (static_cast<int>(components_.size()) != n) {
        throw std::invalid_argument("HomogeneousSystem: need exactly n components");
    }
    for (const HomogeneousPoly& p : components_) {
        if (p.num_vars() != n || p.degree() != d) {
            throw std::invalid_argument("HomogeneousSystem: components disagree on (n, d)");
        }
    }
}

int HomogeneousSystem::num_vars() const { return components_.at(0).num_vars(); }
int HomogeneousSystem::degree() const { return components_.at(0).degree(); }

Eigen::VectorXcd HomogeneousSystem::evaluate(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(components_.size()));
    for (std::size_t i = 0; i < components_.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = components_[i].evaluate(x);
    }
    return out;
}

Eigen::MatrixXcd HomogeneousSystem::jacobian(const Eigen::VectorXcd& x) const {
    const Eigen::Index n = static_cast<Eigen::Index>(components_.size());
    Eigen::MatrixXcd jac(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        jac.row(i) = components_[static_cast<std::size_t>(i)].gradient(x).transpose();
    }
    return jac;
}

cplx weyl_inner_product(const HomogeneousSystem& f, const HomogeneousSystem& g) {
    if (f.num_vars() != g.num_vars() || f.degree() != g.degree()) {
        throw std::invalid_argument("weyl_inner_product: (n, d) mismatch");
    }
    cplx sum(0.0, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::vector<cplx> a = f.component(i).weyl_coeffs();
        const std::vector<cplx> b = g.component(i).weyl_coeffs();
        for (std::size_t k = 0; k < a.size(); ++k) {
            sum += a[k] * std::conj(b[k]);
        }
    }
    return sum;
}

double weyl_norm(const HomogeneousSystem& f) {
    return std::sqrt(std::abs(weyl_inner_product(f, f)));
}

Eigen::VectorXcd residual_map(const HomogeneousSystem& f, const Eigen::VectorXcd& v, cplx lambda) {
    return f.evaluate(v) - lambda * v;
}

Eigen::MatrixXcd jacobian_residual(const HomogeneousSystem& f, const Eigen::VectorXcd& v,
                                   cplx lambda) {
    const Eigen::Index n = static_cast<Eigen::Index>(f.size());
    Eigen::MatrixXcd jac(n, n + 1);
    jac.leftCols(n) = f.jacobian(v);
    jac.leftCols(n).diagonal().array() -= lambda;
    jac.col(n) = -v;
    return jac;
}

namespace {

// Coefficients (ascending in X2-exponent) of (l0*X1 + l1*X2)^a as a
// degree-a binary form.
std::vector<cplx> binary_linear_power(cplx l0, cplx l1, int a) {
    std::vector<cplx> out(static_cast<std::size_t>(a) + 1);
    for (int j = 0; j <= a; ++j) {
        double binom = 1.0;
        for (int t = 1; t <= j; ++t) binom *= static_cast<double>(a - j + t) / t;
        out[static_cast<std::size_t>(j)] =
            binom * std::pow(l0, static_cast<double>(a - j)) * std::pow(l1, static_cast<double>(j));
    }
    return out;
}

// g(L x) for a binary form g and 2x2 matrix L.
HomogeneousPoly substitute_linear_2d(const HomogeneousPoly& g, const Eigen::Matrix2cd& L) {
    const int d = g.degree();
    std::vector<cplx> out(static_cast<std::size_t>(d) + 1, cplx(0.0, 0.0));
    const std::vector<MultiIndex>& idx = g.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const cplx c = g.monomial_coeffs()[k];
        if (c == cplx(0.0, 0.0)) continue;
        const int a = idx[k][0];
        const int b = idx[k][1];
        const std::vector<cplx> pa = binary_linear_power(L(0, 0), L(0, 1), a);
        const std::vector<cplx> pb = binary_linear_power(L(1, 0), L(1, 1), b);
        for (int i = 0; i <= a; ++i) {
            for (int j = 0; j <= b; ++j) {
                out[static_cast<std::size_t>(i + j)] += c * pa[static_cast<std::size_t>(i)] *
                                                        pb[static_cast<std::size_t>(j)];
            }
        }
    }
    return HomogeneousPoly::from_monomial_coeffs(2, d, std::move(out));
}

}  // namespace

HomogeneousSystem unitary_conjugate_2d(const HomogeneousSystem& f, const Eigen::Matrix2cd& U) {
    if (f.num_vars() != 2) throw std::invalid_argument("unitary_conjugate_2d: n must be 2");
    const Eigen::Matrix2cd W = U.adjoint();  // U^{-1} for unitary U
    std::vector<HomogeneousPoly> composed;
    composed.reserve(2);
    for (std::size_t i = 0; i < 2; ++i) {
        composed.push_back(substitute_linear_2d(f.component(i), W));
    }
    // Left-multiply components by U.
    std::vector<HomogeneousPoly> out;
    out.reserve(2);
    for (int i = 0; i < 2; ++i) {
        std::vector<cplx> coeffs(composed[0].monomial_coeffs().size(), cplx(0.0, 0.0));
        for (int j = 0; j < 2; ++j) {
            const std::vector<cplx>& cj = composed[static_cast<std::size_t>(j)].monomial_coeffs();
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                coeffs[k] += U(i, j) * cj[k];
            }
        }
        out.push_back(HomogeneousPoly::from_monomial_coeffs(2, f.degree(), std::move(coeffs)));
    }
    return HomogeneousSystem(std::move(out));
}

}  // namespace eigendist
