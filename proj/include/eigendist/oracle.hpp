#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eigendist/polynomial.hpp"
#include "eigendist/random.hpp"

namespace eigendist {

/// One canonical representative per eigenpair equivalence class, with a
/// certified residual ||f(v) - lambda v|| for each. `valid` is false when
/// the solver could not certify the generic class structure (stalls, path
/// failures, class count off, near-coincident classes); such runs must be
/// skipped, never silently truncated.
struct EigenClassSet {
    std::vector<EigenPair> representatives;
    std::vector<double> residuals;
    bool valid = true;
    std::string message;
};

/// Eigenpair of the start system phi = (X_1^d, ..., X_n^d) in orbit
/// encoding: v has entries epsilon_j * zeta^{i_j} with zeta a primitive
/// (d-1)-th root of unity; exactly one representative stored per orbit of
/// the cyclic group <zeta>.
struct StartSystemSolution {
    std::vector<int> epsilon;       // 0/1, not all zero
    std::vector<int> root_indices;  // i_j in 1..d-1 where epsilon_j = 1, else 0
};

/// Rotate v by a phase so its largest-modulus coordinate becomes real
/// positive, scaling lambda by the matching power of the phase. Idempotent;
/// equivalent normalized pairs map to the same canonical pair.
EigenPair canonicalize(const EigenPair& pair, int d);

/// min over theta of ||v_a - e^{i theta} v_b|| + |lambda_a - e^{i (d-1) theta} lambda_b|,
/// the metric separating eigenpair equivalence classes.
double class_distance(const EigenPair& a, const EigenPair& b, int d);

/// All D(n, d) orbit representatives of the start system eigenpairs, d >= 2.
std::vector<StartSystemSolution> start_solutions(int n, int d);

/// Normalized eigenpair (v, lambda) encoded by a start solution:
/// v = z/||z||, lambda = ||z||^{-(d-1)}.
EigenPair start_solution_pair(const StartSystemSolution& sol, int n, int d);

/// The start system phi itself.
HomogeneousSystem start_system(int n, int d);

/// d = 1 oracle: characteristic polynomial (Faddeev-LeVerrier) + univariate
/// roots + inverse-iteration eigenvectors. n <= 12.
EigenClassSet eigenpairs_d1(const Eigen::MatrixXcd& A);

/// n = 2 oracle: eigenvector condition reduces to the degree-(d+1) binary
/// form z f_1(1, z) - f_2(1, z); roots give all classes (plus (0,1) when
/// the top coefficient vanishes).
EigenClassSet eigenpairs_binary(const HomogeneousSystem& f);

struct HomotopyConfig {
    double initial_dt = 0.05;
    double max_dt = 0.1;
    double min_dt = 1e-10;
    double newton_tol = 1e-12;
    double newton_step_tol = 1e-13;
    int max_newton_steps = 6;
    int accepts_before_increase = 4;
    double dedupe_tol = 1e-7;
};

/// General-(n, d) oracle, d >= 2: tracks all D(n, d) paths of
/// (1-t) gamma F_phi + t F_f from the start solutions, Euler predictor and
/// gauge-fixed Newton corrector, with a random unit-modulus gamma drawn
/// from `gen`. Intended for n <= 4, d <= 4.
EigenClassSet eigenpairs_homotopy(const HomogeneousSystem& f, const HomotopyConfig& config,
                                  SeededGenerator& gen);

}  // namespace eigendist
