#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eigendist/density.hpp"
#include "eigendist/random.hpp"

namespace eigendist {

enum class SampleSource { theory_sampler, oracle_pooled, oracle_uniform_pick };

/// Draws of R = 2|lambda|^2, plus campaign bookkeeping.
struct EmpiricalSample {
    std::vector<double> values;
    SampleSource source = SampleSource::theory_sampler;
    long systems = 0;
    long skipped = 0;  // near-ill-posed oracle runs excluded from the tally
};

struct GofReport {
    long sample_size = 0;
    double ks_statistic = 0.0;
    double ks_critical_1pct = 0.0;  // asymptotic 1.63 / sqrt(N)
    double empirical_mean_modsq = 0.0;
    double theoretical_mean_modsq = 0.0;
    double standard_error = 0.0;
    long skip_count = 0;
    bool passed = false;
};

/// Sup distance between the empirical CDF and `cdf`, both one-sided
/// deviations. Throws on an empty sample.
double ks_statistic(const std::vector<double>& sample, const std::function<double(double)>& cdf);
double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf);

/// Compares the empirical mean of R/2 against expectation_modulus_sq.
/// For i.i.d. sources the KS statistic against mixture_cdf is filled in as
/// well; pooled samples are dependent within a system, so their KS fields
/// are left at zero and only the moment condition is binding.
/// Refuses samples with fewer than 100 draws.
GofReport moment_check(const EmpiricalSample& sample, const DistributionParams& params);

enum class CampaignMode { uniform_pick, pooled };

/// Draws `systems` random systems, solves each with the matching oracle
/// (d = 1: characteristic polynomial; n = 2: binary form; otherwise
/// homotopy) and collects R = 2|lambda|^2. uniform_pick keeps one class
/// per system chosen uniformly (i.i.d. draws); pooled keeps all classes.
/// Invalid oracle runs are skipped and counted; a skip fraction above 0.5%
/// aborts with std::runtime_error. Per-system sub-streams are derived from
/// base_seed, so results are independent of the thread count.
EmpiricalSample mc_eigen_campaign(int n, int d, long systems, CampaignMode mode,
                                  std::uint64_t base_seed, int threads = 0);

/// Monte Carlo check of E|det(A + tI)|^2 against expected_det_identity.
/// m <= 6; pass = within 3 standard errors.
GofReport mc_det_identity(int m, std::complex<double> t, long num_draws, SeededGenerator& gen);

/// Pearson statistic sum (O_k - N p_k)^2 / (N p_k) over the support.
double chi_square_gof_statistic(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs);

/// 99th percentile of chi^2 with `dof` degrees of freedom, pinned for the
/// dof values the suite uses.
double chi_square_critical_1pct(int dof);

struct Histogram {
    std::vector<std::pair<double, double>> bins;  // (center, density estimate)
    long overflow = 0;
    double bin_width = 0.0;
};

/// Density-normalized histogram on [0, range_max); values beyond the range
/// are counted in `overflow` and excluded from the normalization.
Histogram histogram(const EmpiricalSample& sample, int bins, double range_max);

}  // namespace eigendist
