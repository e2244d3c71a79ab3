#include "eigendist/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "eigendist/density.hpp"
#include "eigendist/roots.hpp"

namespace eigendist {

namespace {

cplx unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

double pair_distance_at(const EigenPair& a, const EigenPair& b, int d, double theta) {
    const cplx ph = unit_phase(theta);
    const cplx ph_lambda = unit_phase((d - 1) * theta);
    return (a.v - ph * b.v).norm() + std::abs(a.lambda - ph_lambda * b.lambda);
}

}  // namespace

EigenPair canonicalize(const EigenPair& pair, int d) {
    Eigen::Index jmax = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < pair.v.size(); ++j) {
        const double m = std::abs(pair.v(j));
        if (m > best) {
            best = m;
            jmax = j;
        }
    }
    const double theta = -std::arg(pair.v(jmax));
    EigenPair out;
    out.v = unit_phase(theta) * pair.v;
    out.lambda = unit_phase((d - 1) * theta) * pair.lambda;
    return out;
}

double class_distance(const EigenPair& a, const EigenPair& b, int d) {
    if (a.v.size() != b.v.size()) throw std::invalid_argument("class_distance: dimension mismatch");
    const int coarse = 256;
    double best_theta = 0.0;
    double best = pair_distance_at(a, b, d, 0.0);
    for (int i = 1; i < coarse; ++i) {
        const double theta = 2.0 * M_PI * i / coarse;
        const double val = pair_distance_at(a, b, d, theta);
        if (val < best) {
            best = val;
            best_theta = theta;
        }
    }
    // Golden-section refinement around the coarse minimum.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = best_theta - 2.0 * M_PI / coarse;
    double hi = best_theta + 2.0 * M_PI / coarse;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = pair_distance_at(a, b, d, x1);
    double f2 = pair_distance_at(a, b, d, x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = pair_distance_at(a, b, d, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = pair_distance_at(a, b, d, x2);
        }
    }
    return std::min({best, f1, f2});
}

std::vector<StartSystemSolution> start_solutions(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("start_solutions: need n >= 1, d >= 2");
    std::vector<StartSystemSolution> out;
    // One orbit representative per epsilon: the first nonzero coordinate is
    // pinned to exponent d-1 (value 1); the remaining nonzero coordinates
    // range over all exponents 1..d-1.
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<int> epsilon(static_cast<std::size_t>(n), 0);
        std::vector<std::size_t> free_positions;
        bool first_seen = false;
        for (int j = 0; j < n; ++j) {
            if (mask & (1ull << j)) {
                epsilon[static_cast<std::size_t>(j)] = 1;
                if (first_seen) {
                    free_positions.push_back(static_cast<std::size_t>(j));
                }
                first_seen = true;
            }
        }
        std::vector<int> indices(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            if (epsilon[static_cast<std::size_t>(j)]) indices[static_cast<std::size_t>(j)] = d - 1;
        }
        // Odometer over the free positions.
        std::size_t combos = 1;
        for (std::size_t i = 0; i < free_positions.size(); ++i) combos *= static_cast<std::size_t>(d - 1);
        for (std::size_t c = 0; c < combos; ++c) {
            std::size_t rem = c;
            for (std::size_t pos : free_positions) {
                indices[pos] = 1 + static_cast<int>(rem % static_cast<std::size_t>(d - 1));
                rem /= static_cast<std::size_t>(d - 1);
            }
            out.push_back(StartSystemSolution{epsilon, indices});
        }
    }
    return out;
}

EigenPair start_solution_pair(const StartSystemSolution& sol, int n, int d) {
    if (static_cast<int>(sol.epsilon.size()) != n) {
        throw std::invalid_argument("start_solution_pair: dimension mismatch");
    }
    if (d < 2) throw std::invalid_argument("start_solution_pair: d >= 2 required");
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
    int weight = 0;
    for (int j = 0; j < n; ++j) {
        if (sol.epsilon[static_cast<std::size_t>(j)]) {
            const double angle =
                2.0 * M_PI * sol.root_indices[static_cast<std::size_t>(j)] / (d - 1);
            z(j) = unit_phase(angle);
            ++weight;
        }
    }
    if (weight == 0) throw std::invalid_argument("start_solution_pair: epsilon must be nonzero");
    const double norm = std::sqrt(static_cast<double>(weight));
    EigenPair pair;
    pair.v = z / norm;
    pair.lambda = std::pow(norm, -(d - 1));
    return pair;
}

HomogeneousSystem start_system(int n, int d) {
    std::vector<HomogeneousPoly> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        HomogeneousPoly p(n, d);
        MultiIndex alpha{std::vector<int>(static_cast<std::size_t>(n), 0)};
        alpha.exponents[static_cast<std::size_t>(i)] = d;
        p.set_monomial_coeff(alpha, cplx(1.0, 0.0));
        comps.push_back(std::move(p));
    }
    return HomogeneousSystem(std::move(comps));
}

namespace {

// Merge endpoints into equivalence classes. Collisions within `tol` are a
// soundness problem for every oracle (near the eigendiscriminant) and are
// reported by the caller via the returned count.
struct DedupeResult {
    std::vector<EigenPair> pairs;
    std::vector<double> residuals;
    int collisions = 0;
};

DedupeResult dedupe_classes(const std::vector<EigenPair>& pairs,
                            const std::vector<double>& residuals, int d, double tol) {
    DedupeResult out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool merged = false;
        for (std::size_t j = 0; j < out.pairs.size(); ++j) {
            if (class_distance(pairs[i], out.pairs[j], d) < tol) {
                ++out.collisions;
                if (residuals[i] < out.residuals[j]) {
                    out.pairs[j] = pairs[i];
                    out.residuals[j] = residuals[i];
                }
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.pairs.push_back(canonicalize(pairs[i], d));
            out.residuals.push_back(residuals[i]);
        }
    }
    return out;
}

double eigen_residual(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& v, cplx lambda) {
    return (A * v - lambda * v).norm();
}

// Deterministic generic start vector for inverse iteration.
Eigen::VectorXcd iteration_start(int n, int index) {
    std::uint64_t state = 0xC6A4A7935BD1E995ull + 0x9E3779B9ull * static_cast<std::uint64_t>(index);
    Eigen::VectorXcd b(n);
    for (int i = 0; i < n; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double re = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double im = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
        b(i) = cplx(re, im);
    }
    b.normalize();
    return b;
}

}  // namespace

EigenClassSet eigenpairs_d1(const Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    if (n < 1 || A.cols() != n) throw std::invalid_argument("eigenpairs_d1: square matrix required");
    if (n > 12) throw std::invalid_argument("eigenpairs_d1: n <= 12 (characteristic polynomial conditioning)");

    // Faddeev-LeVerrier: p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0.
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXcd M = A;
    c[static_cast<std::size_t>(n - 1)] = -M.trace();
    for (int k = 2; k <= n; ++k) {
        M = A * (M + c[static_cast<std::size_t>(n - k + 1)] * Eigen::MatrixXcd::Identity(n, n));
        c[static_cast<std::size_t>(n - k)] = -M.trace() / static_cast<double>(k);
    }

    EigenClassSet set;
    std::vector<cplx> lambdas = roots_univariate(ComplexPolynomial1D(c));

    const double scale = std::max(1.0, A.norm());
    std::vector<EigenPair> pairs;
    std::vector<double> residuals;
    for (std::size_t idx = 0; idx < lambdas.size(); ++idx) {
        cplx lambda = lambdas[idx];
        Eigen::VectorXcd b = iteration_start(n, static_cast<int>(idx));
        double res = 1e300;
        for (int iter = 0; iter < 8; ++iter) {
            Eigen::MatrixXcd shifted = A - lambda * Eigen::MatrixXcd::Identity(n, n);
            Eigen::VectorXcd w = shifted.partialPivLu().solve(b);
            if (!w.allFinite() || w.norm() == 0.0) {
                shifted.diagonal().array() -= cplx(1e-13 * scale, 0.0);
                w = shifted.partialPivLu().solve(b);
                if (!w.allFinite() || w.norm() == 0.0) break;
            }
            w.normalize();
            const cplx rayleigh = w.dot(A * w);  // Eigen dot conjugates the left factor
            res = eigen_residual(A, w, rayleigh);
            b = w;
            lambda = rayleigh;
            if (res <= 1e-12 * scale) break;
        }
        if (res > 1e-10 * scale) {
            set.valid = false;
            std::ostringstream msg;
            msg << "inverse iteration stalled on eigenvalue " << idx
                << " (residual " << res << "); matrix near-defective";
            set.message = msg.str();
        }
        pairs.push_back(EigenPair{b, lambda});
        residuals.push_back(res);
    }

    DedupeResult dd = dedupe_classes(pairs, residuals, 1, 1e-7);
    if (dd.collisions > 0) {
        set.valid = false;
        set.message += (set.message.empty() ? "" : "; ");
        set.message += "eigenvalue classes collide within dedupe tolerance (near-defective)";
    }
    set.representatives = std::move(dd.pairs);
    set.residuals = std::move(dd.residuals);
    return set;
}

EigenClassSet eigenpairs_binary(const HomogeneousSystem& f) {
    if (f.num_vars() != 2) throw std::invalid_argument("eigenpairs_binary: n must be 2");
    const int d = f.degree();

    // Dehomogenize v = (1, z). The eigenvector condition v2 f1(v) = v1 f2(v)
    // becomes p(z) = z f1(1,z) - f2(1,z) = 0; coefficient j of f_i(1,z) is
    // the monomial coefficient of X1^{d-j} X2^j, which is slot j of the
    // descending-lex layout.
    const std::vector<cplx>& c1 = f.component(0).monomial_coeffs();
    const std::vector<cplx>& c2 = f.component(1).monomial_coeffs();
    std::vector<cplx> pc(static_cast<std::size_t>(d) + 2, cplx(0.0, 0.0));
    for (int j = 0; j <= d; ++j) {
        pc[static_cast<std::size_t>(j) + 1] += c1[static_cast<std::size_t>(j)];
        pc[static_cast<std::size_t>(j)] -= c2[static_cast<std::size_t>(j)];
    }
    ComplexPolynomial1D p(pc);

    std::vector<EigenPair> pairs;
    std::vector<double> residuals;
    EigenClassSet set;

    std::vector<cplx> zs;
    try {
        zs = roots_univariate(p);
    } catch (const std::runtime_error& e) {
        set.valid = false;
        set.message = e.what();
        return set;
    }
    for (const cplx& z : zs) {
        EigenPair pair;
        pair.v = Eigen::VectorXcd(2);
        pair.v << cplx(1.0, 0.0), z;
        pair.v /= pair.v.norm();
        pair.lambda = (std::abs(pair.v(0)) >= std::abs(pair.v(1)))
                          ? f.component(0).evaluate(pair.v) / pair.v(0)
                          : f.component(1).evaluate(pair.v) / pair.v(1);
        pairs.push_back(pair);
        residuals.push_back(residual_map(f, pair.v, pair.lambda).norm());
    }
    if (p.degree() < d + 1) {
        // X2^d coefficient of f1 vanished: (0, 1) is an eigenvector.
        EigenPair pair;
        pair.v = Eigen::VectorXcd(2);
        pair.v << cplx(0.0, 0.0), cplx(1.0, 0.0);
        pair.lambda = f.component(1).evaluate(pair.v);
        pairs.push_back(pair);
        residuals.push_back(residual_map(f, pair.v, pair.lambda).norm());
    }

    DedupeResult dd = dedupe_classes(pairs, residuals, d, 1e-7);
    const int expected = (d == 1) ? 2 : d + 1;
    if (dd.collisions > 0 || static_cast<int>(dd.pairs.size()) != expected) {
        set.valid = false;
        std::ostringstream msg;
        msg << "near-ill-posed input: " << dd.pairs.size() << " classes after dedupe, expected "
            << expected;
        set.message = msg.str();
    }
    set.representatives = std::move(dd.pairs);
    set.residuals = std::move(dd.residuals);
    return set;
}

namespace {

struct HomotopyContext {
    const HomogeneousSystem* phi;
    const HomogeneousSystem* f;
    cplx gamma;
    int n;
    int d;
};

Eigen::VectorXcd homotopy_value(const HomotopyContext& ctx, const Eigen::VectorXcd& v, cplx lambda,
                                double t) {
    return (1.0 - t) * ctx.gamma * residual_map(*ctx.phi, v, lambda) +
           t * residual_map(*ctx.f, v, lambda);
}

Eigen::MatrixXcd homotopy_jacobian(const HomotopyContext& ctx, const Eigen::VectorXcd& v,
                                   cplx lambda, double t) {
    return (1.0 - t) * ctx.gamma * jacobian_residual(*ctx.phi, v, lambda) +
           t * jacobian_residual(*ctx.f, v, lambda);
}

// Square system: homotopy Jacobian over the chart orthogonal to the
// scaling direction w = (v, (d-1) lambda).
Eigen::MatrixXcd augmented_matrix(const HomotopyContext& ctx, const Eigen::VectorXcd& v,
                                  cplx lambda, double t) {
    const int n = ctx.n;
    Eigen::MatrixXcd aug(n + 1, n + 1);
    aug.topRows(n) = homotopy_jacobian(ctx, v, lambda, t);
    Eigen::VectorXcd w(n + 1);
    w.head(n) = v;
    w(n) = static_cast<double>(ctx.d - 1) * lambda;
    aug.row(n) = w.adjoint();
    return aug;
}

void gauge_normalize(Eigen::VectorXcd& v, cplx& lambda, int d) {
    const double s = 1.0 / v.norm();
    v *= s;
    lambda *= std::pow(s, d - 1);
}

// Newton on H(., t) = 0 in the w-orthogonal chart. Returns true on
// convergence per the residual/step criteria.
bool newton_correct(const HomotopyContext& ctx, Eigen::VectorXcd& v, cplx& lambda, double t,
                    const HomotopyConfig& cfg) {
    double prev_res = 1e300;
    for (int iter = 0; iter < cfg.max_newton_steps; ++iter) {
        const Eigen::VectorXcd H = homotopy_value(ctx, v, lambda, t);
        const double res = H.norm();
        if (res <= cfg.newton_tol) return true;
        if (iter > 0 && res > prev_res) return false;
        prev_res = res;

        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(ctx.n + 1);
        rhs.head(ctx.n) = -H;
        const Eigen::VectorXcd delta =
            augmented_matrix(ctx, v, lambda, t).partialPivLu().solve(rhs);
        if (!delta.allFinite()) return false;
        v += delta.head(ctx.n);
        lambda += delta(ctx.n);
        gauge_normalize(v, lambda, ctx.d);
        if (delta.norm() <= cfg.newton_step_tol) {
            return homotopy_value(ctx, v, lambda, t).norm() <= 10.0 * cfg.newton_tol;
        }
    }
    return homotopy_value(ctx, v, lambda, t).norm() <= cfg.newton_tol;
}

}  // namespace

EigenClassSet eigenpairs_homotopy(const HomogeneousSystem& f, const HomotopyConfig& config,
                                  SeededGenerator& gen) {
    const int n = f.num_vars();
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("eigenpairs_homotopy: d >= 2 required");

    const HomogeneousSystem phi = start_system(n, d);
    HomotopyContext ctx{&phi, &f, unit_phase(2.0 * M_PI * gen.uniform01()), n, d};

    const std::vector<StartSystemSolution> starts = start_solutions(n, d);
    const int expected = static_cast<int>(count_classes({n, static_cast<double>(d)}) + 0.5);

    EigenClassSet set;
    std::vector<EigenPair> ends;
    std::vector<double> residuals;
    std::vector<std::string> failures;

    for (std::size_t path = 0; path < starts.size(); ++path) {
        EigenPair cur = start_solution_pair(starts[path], n, d);
        Eigen::VectorXcd v = cur.v;
        cplx lambda = cur.lambda;
        double t = 0.0;
        double dt = config.initial_dt;
        int accepts = 0;
        bool ok = true;

        while (t < 1.0 - 1e-14) {
            dt = std::min(dt, 1.0 - t);
            // Euler predictor on the Davidenko system.
            Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n + 1);
            rhs.head(n) = ctx.gamma * residual_map(phi, v, lambda) - residual_map(f, v, lambda);
            const Eigen::VectorXcd dot =
                augmented_matrix(ctx, v, lambda, t).partialPivLu().solve(rhs);

            bool success = false;
            Eigen::VectorXcd v_try = v;
            cplx lambda_try = lambda;
            if (dot.allFinite()) {
                v_try += dt * dot.head(n);
                lambda_try += dt * dot(n);
                gauge_normalize(v_try, lambda_try, d);
                const Eigen::VectorXcd v_pred = v_try;
                const cplx lambda_pred = lambda_try;
                success = newton_correct(ctx, v_try, lambda_try, t + dt, config);
                if (success) {
                    // Reject steps where the corrector wandered far from the
                    // predicted point: that is how a path jumps into a
                    // neighboring basin near a close encounter.
                    const double pred_move = dt * dot.norm();
                    const double corr_move =
                        (v_try - v_pred).norm() + std::abs(lambda_try - lambda_pred);
                    if (corr_move > 0.5 * pred_move && corr_move > 1e-8) success = false;
                }
            }
            if (success) {
                v = v_try;
                lambda = lambda_try;
                t += dt;
                if (++accepts >= config.accepts_before_increase) {
                    dt = std::min(2.0 * dt, config.max_dt);
                    accepts = 0;
                }
            } else {
                dt *= 0.5;
                accepts = 0;
                if (dt < config.min_dt) {
                    std::ostringstream msg;
                    msg << "path " << path << " failed: step size underflow at t = " << t;
                    failures.push_back(msg.str());
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;

        // Final polish on F_f itself.
        HomotopyConfig polish = config;
        polish.max_newton_steps = 12;
        polish.newton_tol = 1e-13;
        newton_correct(ctx, v, lambda, 1.0, polish);
        ends.push_back(EigenPair{v, lambda});
        residuals.push_back(residual_map(f, v, lambda).norm());
    }

    DedupeResult dd = dedupe_classes(ends, residuals, d, config.dedupe_tol);
    set.representatives = std::move(dd.pairs);
    set.residuals = std::move(dd.residuals);

    std::ostringstream msg;
    for (const std::string& fail : failures) msg << fail << "; ";
    if (dd.collisions > 0) msg << "paths merged after polish (" << dd.collisions << "); ";
    if (static_cast<int>(set.representatives.size()) != expected) {
        msg << "class count " << set.representatives.size() << " != D(n,d) = " << expected
            << ", suspected ill-posed input; ";
    }
    set.message = msg.str();
    set.valid = failures.empty() && dd.collisions == 0 &&
                static_cast<int>(set.representatives.size()) == expected;
    return set;
}

}  // namespace eigendist
