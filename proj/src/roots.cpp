#include "eigendist/roots.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace eigendist {

using cplx = std::complex<double>;

ComplexPolynomial1D::ComplexPolynomial1D(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ComplexPolynomial1D: empty coefficients");
    double max_abs = 0.0;
    for (const cplx& c : coeffs_) max_abs = std::max(max_abs, std::abs(c));
    const double tol = 1e-13 * max_abs;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
}

cplx ComplexPolynomial1D::evaluate(cplx z) const {
    cplx y = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) y = y * z + coeffs_[i];
    return y;
}

cplx ComplexPolynomial1D::derivative_at(cplx z) const {
    const int deg = degree();
    if (deg == 0) return {0.0, 0.0};
    cplx y = static_cast<double>(deg) * coeffs_.back();
    for (int i = deg - 1; i >= 1; --i) y = y * z + static_cast<double>(i) * coeffs_[static_cast<std::size_t>(i)];
    return y;
}

double ComplexPolynomial1D::evaluation_scale(cplx z) const {
    const double az = std::abs(z);
    double s = 0.0;
    double p = 1.0;
    for (const cplx& c : coeffs_) {
        s += std::abs(c) * p;
        p *= az;
    }
    return s;
}

namespace {

// Deterministic uniform stream for perturbation restarts.
double next_unit(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    x ^= x >> 31;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<cplx> roots_univariate(const ComplexPolynomial1D& p) {
    std::vector<cplx> coeffs = p.coefficients();
    if (coeffs.size() < 2) throw std::invalid_argument("roots_univariate: degree >= 1 required");

    // Exact zero roots: factor out z^m so clusters at the origin do not
    // stall the simultaneous iteration.
    std::vector<cplx> roots;
    while (coeffs.size() > 1 && coeffs.front() == cplx(0.0, 0.0)) {
        roots.emplace_back(0.0, 0.0);
        coeffs.erase(coeffs.begin());
    }
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg == 0) return roots;

    ComplexPolynomial1D q(coeffs);

    // Initial approximations on a circle sized by the Cauchy bound.
    double bound = 0.0;
    for (int i = 0; i < deg; ++i) {
        bound = std::max(bound, std::abs(coeffs[static_cast<std::size_t>(i)] / coeffs.back()));
    }
    const double radius = 0.5 + 0.5 * std::min(1.0 + bound, 1e6);
    std::vector<cplx> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        const double theta = 2.0 * M_PI * (i + 0.25) / deg + 0.40;
        z[static_cast<std::size_t>(i)] = radius * cplx(std::cos(theta), std::sin(theta));
    }

    std::uint64_t perturb_state = 0x8D1A92C4B2F0E3ADull;
    const int max_sweeps = 160;
    const int max_rounds = 4;
    for (int round = 0; round < max_rounds; ++round) {
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            double max_step = 0.0;
            for (int i = 0; i < deg; ++i) {
                const cplx zi = z[static_cast<std::size_t>(i)];
                const cplx pv = q.evaluate(zi);
                if (std::abs(pv) <= 1e-16 * q.evaluation_scale(zi)) continue;
                cplx dv = q.derivative_at(zi);
                if (dv == cplx(0.0, 0.0)) dv = cplx(1e-30, 0.0);
                const cplx w = pv / dv;
                cplx repulsion(0.0, 0.0);
                for (int j = 0; j < deg; ++j) {
                    if (j == i) continue;
                    const cplx diff = zi - z[static_cast<std::size_t>(j)];
                    if (diff != cplx(0.0, 0.0)) repulsion += 1.0 / diff;
                }
                cplx denom = 1.0 - w * repulsion;
                if (std::abs(denom) < 1e-14) denom = cplx(1e-14, 0.0);
                const cplx step = w / denom;
                z[static_cast<std::size_t>(i)] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
            }
            if (max_step <= 5e-15) {
                roots.insert(roots.end(), z.begin(), z.end());
                return roots;
            }
        }
        // Stalled: perturb every approximation and retry.
        for (cplx& zi : z) {
            const double u = next_unit(perturb_state) - 0.5;
            const double v = next_unit(perturb_state) - 0.5;
            zi += 1e-4 * (1.0 + std::abs(zi)) * cplx(u, v);
        }
    }
    throw std::runtime_error("roots_univariate: no convergence after perturbation restarts");
}

}  // namespace eigendist
