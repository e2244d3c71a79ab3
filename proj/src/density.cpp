#include "eigendist/density.hpp"

#include <cmath>
#include <stdexcept>

namespace eigendist {

namespace {

void check_params(const DistributionParams& p) {
    if (p.n < 1 || p.d < 1.0) throw std::invalid_argument("DistributionParams: need n >= 1, d >= 1");
}

// e^{-x_exp} * sum_{k=0}^{terms-1} x_pow^k / k!, with 0 <= x_pow <= x_exp.
// Direct recurrence keeps every intermediate in range while x_exp <= 700;
// beyond that each term is assembled in log space.
double exp_weighted_series(double x_exp, double x_pow, int terms) {
    if (terms <= 0) return 0.0;
    if (x_exp <= 700.0) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < terms; ++k) {
            term *= x_pow / k;
            sum += term;
        }
        return std::exp(-x_exp) * sum;
    }
    double sum = std::exp(-x_exp);  // k = 0
    if (x_pow > 0.0) {
        const double lx = std::log(x_pow);
        for (int k = 1; k < terms; ++k) {
            sum += std::exp(-x_exp + k * lx - log_factorial(k));
        }
    }
    return sum;
}

}  // namespace

double count_classes(const DistributionParams& params) {
    check_params(params);
    if (params.d == 1.0) return static_cast<double>(params.n);
    // (d^n - 1)/(d - 1) in expm1/log1p form; stable as d -> 1.
    const double dm1 = params.d - 1.0;
    return std::expm1(params.n * std::log1p(dm1)) / dm1;
}

double log_factorial(int k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(4096);
        t[0] = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            t[i] = t[i - 1] + std::log(static_cast<double>(i));
        }
        return t;
    }();
    if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
    if (static_cast<std::size_t>(k) < table.size()) return table[static_cast<std::size_t>(k)];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double upper_incomplete_gamma_int(int n, double x) {
    if (n < 1 || x < 0.0) throw std::invalid_argument("upper_incomplete_gamma_int: need n >= 1, x >= 0");
    if (n > 170) throw std::invalid_argument("upper_incomplete_gamma_int: (n-1)! overflows, use regularized_gamma_q");
    return std::exp(log_factorial(n - 1)) * regularized_gamma_q(n, x);
}

double regularized_gamma_q(int n, double x) {
    if (n < 1 || x < 0.0) throw std::invalid_argument("regularized_gamma_q: need n >= 1, x >= 0");
    return exp_weighted_series(x, x, n);
}

double regularized_gamma_p(int n, double x) { return 1.0 - regularized_gamma_q(n, x); }

double chi_square_density_even(int dof, double R) {
    if (dof < 2 || dof % 2 != 0) throw std::invalid_argument("chi_square_density_even: dof must be positive even");
    if (R < 0.0) throw std::invalid_argument("chi_square_density_even: R >= 0 required");
    const int k = dof / 2;
    if (R == 0.0) return k == 1 ? 0.5 : 0.0;
    // e^{-R/2} R^{k-1} / (2^k (k-1)!)
    return std::exp(-0.5 * R + (k - 1) * std::log(R) - k * std::log(2.0) - log_factorial(k - 1));
}

double chi_square_cdf_even(int dof, double x) {
    if (dof < 2 || dof % 2 != 0) throw std::invalid_argument("chi_square_cdf_even: dof must be positive even");
    if (x < 0.0) throw std::invalid_argument("chi_square_cdf_even: x >= 0 required");
    return regularized_gamma_p(dof / 2, 0.5 * x);
}

MixtureSpec mixture_weights(const DistributionParams& params) {
    check_params(params);
    MixtureSpec spec{params.n, params.d, {}};
    spec.weights.resize(static_cast<std::size_t>(params.n));
    if (params.d == 1.0) {
        const double w = 1.0 / params.n;
        for (double& x : spec.weights) x = w;
        return spec;
    }
    const double log_q = -std::log1p(params.d - 1.0);  // log(1/d)
    const double one_minus_q = (params.d - 1.0) / params.d;
    const double one_minus_qn = -std::expm1(params.n * log_q);
    for (int k = 1; k <= params.n; ++k) {
        spec.weights[static_cast<std::size_t>(k - 1)] =
            std::exp((k - 1) * log_q) * one_minus_q / one_minus_qn;
    }
    return spec;
}

double density_planar(const DistributionParams& params, std::complex<double> lambda) {
    check_params(params);
    const double r2 = std::norm(lambda);
    // d^{n-1} e^{-|l|^2} / (pi D) * sum_{k<n} (|l|^2/d)^k / k!
    const double log_pref =
        (params.n - 1) * std::log(params.d) - std::log(M_PI * count_classes(params));
    return std::exp(log_pref) * exp_weighted_series(r2, r2 / params.d, params.n);
}

double density_radial(const DistributionParams& params, double R) {
    check_params(params);
    if (R < 0.0) throw std::invalid_argument("density_radial: R >= 0 required");
    // d^{n-1} / (2 D) e^{-R/2} sum_{k<n} (R/(2d))^k / k!
    const double log_pref =
        (params.n - 1) * std::log(params.d) - std::log(2.0 * count_classes(params));
    return std::exp(log_pref) * exp_weighted_series(0.5 * R, 0.5 * R / params.d, params.n);
}

double density_radial_mixture(const DistributionParams& params, double R) {
    const MixtureSpec spec = mixture_weights(params);
    double sum = 0.0;
    for (int k = 1; k <= params.n; ++k) {
        sum += spec.weights[static_cast<std::size_t>(k - 1)] * chi_square_density_even(2 * k, R);
    }
    return sum;
}

double mixture_cdf(const DistributionParams& params, double R) {
    if (R < 0.0) throw std::invalid_argument("mixture_cdf: R >= 0 required");
    const MixtureSpec spec = mixture_weights(params);
    double sum = 0.0;
    for (int k = 1; k <= params.n; ++k) {
        sum += spec.weights[static_cast<std::size_t>(k - 1)] * regularized_gamma_p(k, 0.5 * R);
    }
    return sum;
}

double expectation_modulus_sq(const DistributionParams& params) {
    check_params(params);
    if (params.d == 1.0) return 0.5 * (params.n + 1);
    return truncated_geometric_mean(1.0 / params.d, params.n);
}

double truncated_geometric_mean(double q, int n) {
    if (q < 0.0 || q >= 1.0 || n < 1) throw std::invalid_argument("truncated_geometric_mean: need 0 <= q < 1, n >= 1");
    // (n q^{n+1} - (n+1) q^n + 1) / ((1 - q^n)(1 - q))
    const double qn = std::pow(q, n);
    const double numer = n * qn * q - (n + 1) * qn + 1.0;
    return numer / ((1.0 - qn) * (1.0 - q));
}

double expectation_modulus_sq_increment_n(const DistributionParams& params) {
    check_params(params);
    if (params.d == 1.0) return 0.5;  // (n+2)/2 - (n+1)/2
    const double q = 1.0 / params.d;
    const double qn = std::pow(q, params.n);
    return qn * (1.0 - q) * (params.n + 1.0 - expectation_modulus_sq(params)) /
           (1.0 - qn * q);
}

double density_normalized(const DistributionParams& params, double tau) {
    check_params(params);
    if (tau < 0.0) throw std::invalid_argument("density_normalized: tau >= 0 required");
    if (params.d == 1.0) {
        // 2n * rho_R(2 n tau) = e^{-n tau} sum_{k<n} (n tau)^k / k!
        const double x = params.n * tau;
        return exp_weighted_series(x, x, params.n);
    }
    const double q = 1.0 / params.d;
    const double one_minus_q = (params.d - 1.0) / params.d;
    const double one_minus_qn = -std::expm1(-params.n * std::log1p(params.d - 1.0));
    const double a = 2.0 * tau / one_minus_q;
    return (2.0 / one_minus_qn) * exp_weighted_series(a, q * a, params.n);
}

double density_limit(double d, double tau) {
    if (d < 1.0 || tau < 0.0) throw std::invalid_argument("density_limit: need d >= 1, tau >= 0");
    if (d == 1.0) return (tau <= 1.0) ? 1.0 : 0.0;
    return 2.0 * std::exp(-2.0 * tau);
}

double expected_det_identity(int m, std::complex<double> t) {
    if (m < 1) throw std::invalid_argument("expected_det_identity: m >= 1 required");
    // e^{x} Gamma(m+1, x) = sum_{k=0}^{m} (m!/k!) x^k with x = |t|^2.
    const double x = std::norm(t);
    double sum = 0.0;
    double falling = 1.0;  // m!/k! accumulated from k = m downwards
    for (int k = m; k >= 0; --k) {
        sum += falling * std::pow(x, k);
        falling *= static_cast<double>(k);
    }
    return sum;
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

// Returns {kronrod, |kronrod - gauss|}.
std::pair<double, double> gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kKronrodNodes[i]);
        fv[14 - i] = f(c + h * kKronrodNodes[i]);
    }
    fv[7] = f(c);
    double kronrod = kKronrodWeights[7] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    }
    // Gauss points are the odd-indexed Kronrod nodes.
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 3; ++i) {
        gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    }
    return {h * kronrod, std::abs(h * (kronrod - gauss))};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int depth) {
    auto [value, err] = gk15(f, a, b);
    if (err <= abs_tol || depth <= 0) return value;
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * abs_tol, depth - 1) +
           integrate_rec(f, c, b, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    return integrate_rec(f, a, b, abs_tol, max_depth);
}

double radial_tail_cutoff(const DistributionParams& params, double tail_bound) {
    check_params(params);
    // The heaviest mixture component is chi^2_{2n}; R * rho_R has tail
    // bounded by 2n * Q(n+1, R/2).
    double R = 50.0;
    while (2.0 * params.n * regularized_gamma_q(params.n + 1, 0.5 * R) > tail_bound && R < 1e6) {
        R *= 1.5;
    }
    return R;
}

}  // namespace eigendist
