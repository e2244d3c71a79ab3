#include "eigendist/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigendist/density.hpp"
#include "eigendist/figures.hpp"
#include "eigendist/oracle.hpp"
#include "eigendist/random.hpp"
#include "eigendist/stats.hpp"

namespace eigendist {

namespace {

using nlohmann::json;

constexpr std::uint64_t kSeedSamplerGof = 0x5eed0002ull;
constexpr std::uint64_t kSeedModnTrick = 0x5eed0003ull;
constexpr std::uint64_t kSeedGinibreCampaign = 0x5eed0005ull;
constexpr std::uint64_t kSeedBinaryCampaign = 0x5eed0006ull;
constexpr std::uint64_t kSeedHomotopy = 0x5eed0007ull;
constexpr std::uint64_t kSeedDetCheck = 0x5eed0008ull;

CheckResult c1_closed_form_equality(bool inject_weight_error) {
    CheckResult r{"closed-form equality (mixture vs product form)", false, {}};
    double max_diff = 0.0;
    for (int n = 1; n <= 10; ++n) {
        for (int d = 1; d <= 5; ++d) {
            const DistributionParams params{n, static_cast<double>(d)};
            MixtureSpec spec = mixture_weights(params);
            if (inject_weight_error) spec.weights[0] *= 1.001;
            for (int i = 0; i <= 500; ++i) {
                const double R = 0.1 * i;
                double mixture = 0.0;
                for (int k = 1; k <= n; ++k) {
                    mixture += spec.weights[static_cast<std::size_t>(k - 1)] *
                               chi_square_density_even(2 * k, R);
                }
                max_diff = std::max(max_diff, std::abs(mixture - density_radial(params, R)));
            }
        }
    }
    r.passed = max_diff <= 1e-12;
    r.values = {{"max_abs_difference", max_diff}, {"tolerance", 1e-12}};
    return r;
}

CheckResult c2_sampler_gof() {
    CheckResult r{"five-step sampler KS goodness of fit, (n,d) in {1..5}^2", false, {}};
    const long N = 100000;
    const double critical = 1.63 / std::sqrt(static_cast<double>(N));
    double worst = 0.0;
    int worst_n = 0, worst_d = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int d = 1; d <= 5; ++d) {
            SeededGenerator gen(
                derive_stream_seed(kSeedSamplerGof, static_cast<std::uint64_t>(16 * n + d)));
            std::vector<double> R(static_cast<std::size_t>(N));
            for (long i = 0; i < N; ++i) {
                R[static_cast<std::size_t>(i)] =
                    2.0 * sample_eigenvalue_modulus_sq(n, static_cast<double>(d), gen);
            }
            const DistributionParams params{n, static_cast<double>(d)};
            const double stat =
                ks_statistic(R, [&](double x) { return mixture_cdf(params, x); });
            if (stat > worst) {
                worst = stat;
                worst_n = n;
                worst_d = d;
            }
        }
    }
    r.passed = worst < critical;
    r.values = {{"worst_ks", worst},
                {"worst_pair", {worst_n, worst_d}},
                {"critical", critical},
                {"draws_per_pair", N}};
    return r;
}

CheckResult c3_modn_equivalence() {
    CheckResult r{"mod-n Bernoulli trick matches truncated geometric masses", false, {}};
    const long N = 100000;
    const std::vector<std::pair<double, int>> cases{{0.5, 2}, {1.0 / 3.0, 5}, {0.9, 4}};
    bool all = true;
    json details = json::array();
    std::uint64_t case_idx = 0;
    for (const auto& [q, n] : cases) {
        SeededGenerator gen(derive_stream_seed(kSeedModnTrick, case_idx++));
        std::vector<long> counts(static_cast<std::size_t>(n), 0);
        for (long i = 0; i < N; ++i) {
            ++counts[static_cast<std::size_t>(sample_truncated_geometric_modn(q, n, gen) - 1)];
        }
        const double stat =
            chi_square_gof_statistic(counts, TruncatedGeometricSpec{q, n}.pmf());
        const double critical = chi_square_critical_1pct(n - 1);
        all = all && stat < critical;
        details.push_back({{"q", q}, {"n", n}, {"statistic", stat}, {"critical", critical}});
    }
    r.passed = all;
    r.values = {{"cases", details}, {"draws_per_case", N}};
    return r;
}

CheckResult c4_expectations() {
    CheckResult r{"expectation formulas vs quadrature, spot values, monotonicity", false, {}};
    double max_quad_diff = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 5; ++d) {
            const DistributionParams params{n, static_cast<double>(d)};
            const double cutoff = radial_tail_cutoff(params);
            const double integral = 0.5 * integrate_adaptive(
                                              [&](double R) { return R * density_radial(params, R); },
                                              0.0, cutoff, 1e-11);
            max_quad_diff =
                std::max(max_quad_diff, std::abs(integral - expectation_modulus_sq(params)));
        }
    }
    const double spot41 = expectation_modulus_sq({4, 1.0});
    const double spot22 = expectation_modulus_sq({2, 2.0});

    bool monotone = true;
    for (int n : {2, 3, 5, 10}) {
        double prev = expectation_modulus_sq({n, 1.0});
        for (double d = 1.25; d <= 10.0 + 1e-9; d += 0.25) {
            const double cur = expectation_modulus_sq({n, d});
            monotone = monotone && cur < prev;
            prev = cur;
        }
    }
    // In the n direction the adjacent difference shrinks like q^n and falls
    // below one ulp of E around n = 25 at d = 5; the pairwise comparison is
    // therefore evaluated through the factored increment, whose sign is
    // exact, alongside a non-decreasing check on the raw values.
    for (double d : {1.0, 2.0, 3.0, 5.0}) {
        for (int n = 1; n < 30; ++n) {
            monotone = monotone && expectation_modulus_sq_increment_n({n, d}) > 0.0;
            monotone = monotone &&
                       expectation_modulus_sq({n + 1, d}) >= expectation_modulus_sq({n, d});
        }
    }

    r.passed = max_quad_diff <= 1e-8 && spot41 == 2.5 && spot22 == 4.0 / 3.0 && monotone;
    r.values = {{"max_quadrature_difference", max_quad_diff},
                {"spot_n4_d1", spot41},
                {"spot_n2_d2", spot22},
                {"monotone", monotone}};
    return r;
}

CheckResult c5_ginibre_campaign(int threads) {
    CheckResult r{"empirical spectra, d = 1 (n = 4 Ginibre, 5000 systems)", false, {}};
    const long systems = 5000;
    const DistributionParams params{4, 1.0};
    const EmpiricalSample uniform = mc_eigen_campaign(4, 1, systems, CampaignMode::uniform_pick,
                                                      kSeedGinibreCampaign, threads);
    const double ks =
        ks_statistic(uniform, [&](double R) { return mixture_cdf(params, R); });
    const double critical = 1.63 / std::sqrt(static_cast<double>(uniform.values.size()));

    const EmpiricalSample pooled =
        mc_eigen_campaign(4, 1, systems, CampaignMode::pooled, kSeedGinibreCampaign, threads);
    const GofReport moment = moment_check(pooled, params);

    r.passed = ks < critical && moment.passed;
    r.values = {{"ks", ks},
                {"ks_critical", critical},
                {"pooled_mean_modsq", moment.empirical_mean_modsq},
                {"theoretical_mean_modsq", moment.theoretical_mean_modsq},
                {"standard_error", moment.standard_error},
                {"skipped", uniform.skipped + pooled.skipped}};
    return r;
}

CheckResult c6_binary_campaign(int threads) {
    CheckResult r{"empirical spectra, d > 1 via binary-form oracle (n = 2)", false, {}};
    const long systems = 5000;
    bool all = true;
    json details = json::array();
    for (int d : {2, 3}) {
        const DistributionParams params{2, static_cast<double>(d)};
        const std::uint64_t seed =
            derive_stream_seed(kSeedBinaryCampaign, static_cast<std::uint64_t>(d));
        const EmpiricalSample uniform =
            mc_eigen_campaign(2, d, systems, CampaignMode::uniform_pick, seed, threads);
        const double ks =
            ks_statistic(uniform, [&](double R) { return mixture_cdf(params, R); });
        const double critical = 1.63 / std::sqrt(static_cast<double>(uniform.values.size()));
        const EmpiricalSample pooled =
            mc_eigen_campaign(2, d, systems, CampaignMode::pooled, seed, threads);
        const GofReport moment = moment_check(pooled, params);
        const double count_fraction =
            1.0 - static_cast<double>(uniform.skipped + pooled.skipped) /
                      static_cast<double>(2 * systems);
        // Derived from the closed formula, not the spec's prose:
        // E|lambda|^2 = (n - (n+1)d + d^{n+1}) / ((d^n - 1)(d - 1)).
        const double expected_mean = (d == 2) ? 4.0 / 3.0 : 5.0 / 4.0;
        const bool ok = ks < critical && moment.passed && count_fraction >= 0.99 &&
                        std::abs(moment.theoretical_mean_modsq - expected_mean) < 1e-15;
        all = all && ok;
        details.push_back({{"d", d},
                           {"ks", ks},
                           {"ks_critical", critical},
                           {"pooled_mean_modsq", moment.empirical_mean_modsq},
                           {"expected_mean_modsq", expected_mean},
                           {"standard_error", moment.standard_error},
                           {"class_count_fraction", count_fraction}});
    }
    r.passed = all;
    r.values = {{"cases", details}, {"systems_per_case", systems}};
    return r;
}

CheckResult c7_homotopy_oracle() {
    CheckResult r{"homotopy oracle: (3,2) class counts and (2,3) cross-agreement", false, {}};
    int successes = 0;
    for (int i = 0; i < 100; ++i) {
        SeededGenerator gen(derive_stream_seed(kSeedHomotopy, static_cast<std::uint64_t>(i)));
        const HomogeneousSystem f = sample_weyl_system(3, 2, gen);
        const EigenClassSet set = eigenpairs_homotopy(f, HomotopyConfig{}, gen);
        const bool ok = set.valid && set.representatives.size() == 7 &&
                        *std::max_element(set.residuals.begin(), set.residuals.end()) <= 1e-10;
        if (ok) ++successes;
    }

    int matched = 0;
    double worst_match = 0.0;
    for (int i = 0; i < 50; ++i) {
        SeededGenerator gen(
            derive_stream_seed(kSeedHomotopy, 1000ull + static_cast<std::uint64_t>(i)));
        const HomogeneousSystem f = sample_weyl_system(2, 3, gen);
        const EigenClassSet a = eigenpairs_binary(f);
        const EigenClassSet b = eigenpairs_homotopy(f, HomotopyConfig{}, gen);
        if (!a.valid || !b.valid || a.representatives.size() != 4 ||
            b.representatives.size() != 4) {
            continue;
        }
        // Optimal assignment over all 4! pairings of the eigenvalue sets.
        std::vector<int> perm{0, 1, 2, 3};
        double best = 1e300;
        do {
            double worst = 0.0;
            for (int k = 0; k < 4; ++k) {
                worst = std::max(worst,
                                 std::abs(a.representatives[static_cast<std::size_t>(k)].lambda -
                                          b.representatives[static_cast<std::size_t>(perm[
                                              static_cast<std::size_t>(k)])].lambda));
            }
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        worst_match = std::max(worst_match, best);
        if (best <= 1e-8) ++matched;
    }

    r.passed = successes >= 99 && matched == 50;
    r.values = {{"count_successes_of_100", successes},
                {"cross_matched_of_50", matched},
                {"worst_eigenvalue_match", worst_match}};
    return r;
}

CheckResult c8_det_identity() {
    CheckResult r{"Monte Carlo determinant identity, (m,t) in {1,2,3} x {0,1,1+i}", false, {}};
    const long N = 100000;
    bool all = true;
    json details = json::array();
    std::uint64_t idx = 0;
    for (int m : {1, 2, 3}) {
        for (std::complex<double> t : {std::complex<double>(0, 0), std::complex<double>(1, 0),
                                       std::complex<double>(1, 1)}) {
            SeededGenerator gen(derive_stream_seed(kSeedDetCheck, idx++));
            const GofReport report = mc_det_identity(m, t, N, gen);
            all = all && report.passed;
            details.push_back({{"m", m},
                               {"t", {t.real(), t.imag()}},
                               {"empirical", report.empirical_mean_modsq},
                               {"theoretical", report.theoretical_mean_modsq},
                               {"standard_error", report.standard_error}});
        }
    }
    r.passed = all;
    r.values = {{"cases", details}, {"draws_per_case", N}};
    return r;
}

CheckResult c9_limit_laws() {
    CheckResult r{"limit laws: exponential (d = 2, n = 500) and circular (d = 1, n = 100)", false, {}};
    double sup_exp = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double tau = 0.01 * i;
        sup_exp = std::max(sup_exp,
                           std::abs(density_normalized({500, 2.0}, tau) - density_limit(2.0, tau)));
    }

    // The deviation from the indicator is the Poisson CDF P(Pois(100 tau) <= 99)
    // tail; its suprema over the tested intervals sit at the interval edges
    // (0.060744 at tau = 0.85, 0.071612 at tau = 1.15), so the frozen bound
    // is 0.072. The 0.06 figure circulating for this check is below the
    // attainable deviation at tau = 1.15.
    double sup_ind = 0.0;
    for (int i = 0; i <= 85; ++i) {
        const double tau = 0.01 * i;
        sup_ind = std::max(sup_ind,
                           std::abs(density_normalized({100, 1.0}, tau) - density_limit(1.0, tau)));
    }
    for (int i = 115; i <= 300; ++i) {
        const double tau = 0.01 * i;
        sup_ind = std::max(sup_ind,
                           std::abs(density_normalized({100, 1.0}, tau) - density_limit(1.0, tau)));
    }

    r.passed = sup_exp <= 1e-8 && sup_ind <= 0.072;
    r.values = {{"sup_deviation_exponential", sup_exp},
                {"tolerance_exponential", 1e-8},
                {"sup_deviation_indicator", sup_ind},
                {"tolerance_indicator", 0.072}};
    return r;
}

CheckResult c10_figures() {
    CheckResult r{"figure tables: anchors and monotonicity", false, {}};
    const FigureTable left = figure1_left();
    const FigureTable right = figure1_right();
    const FigureTable f2r = figure2_right();

    bool anchors = left.rows[0][0] == 1.0;
    const double expected_at_d1[4] = {1.5, 2.0, 3.0, 5.5};  // (n+1)/2 for n in {2,3,5,10}
    for (int c = 0; c < 4; ++c) {
        anchors = anchors && left.rows[0][static_cast<std::size_t>(c + 1)] ==
                                 expected_at_d1[c];
    }
    for (std::size_t row = 0; row < right.rows.size(); ++row) {
        const double n = right.rows[row][0];
        anchors = anchors && right.rows[row][1] == 0.5 * (n + 1.0);
    }
    anchors = anchors && f2r.rows[0][0] == 0.0 && f2r.rows[0][4] == 2.0;

    bool monotone = true;
    const double ds[4] = {1.0, 2.0, 3.0, 5.0};
    for (std::size_t col = 1; col <= 4; ++col) {
        for (std::size_t row = 1; row < left.rows.size(); ++row) {
            monotone = monotone && left.rows[row][col] < left.rows[row - 1][col];
        }
        // Emitted doubles tie once the increment drops below one ulp (d = 5,
        // n ~ 25): non-decreasing on the table, strictness via the factored
        // increment.
        for (std::size_t row = 1; row < right.rows.size(); ++row) {
            monotone = monotone && right.rows[row][col] >= right.rows[row - 1][col];
            monotone = monotone && expectation_modulus_sq_increment_n(
                                       {static_cast<int>(row), ds[col - 1]}) > 0.0;
        }
    }

    r.passed = anchors && monotone;
    r.values = {{"anchors", anchors}, {"monotone", monotone}};
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const AcceptanceOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(c1_closed_form_equality(options.inject_weight_error));
    results.push_back(c2_sampler_gof());
    results.push_back(c3_modn_equivalence());
    results.push_back(c4_expectations());
    results.push_back(c5_ginibre_campaign(options.threads));
    results.push_back(c6_binary_campaign(options.threads));
    results.push_back(c7_homotopy_oracle());
    results.push_back(c8_det_identity());
    results.push_back(c9_limit_laws());
    results.push_back(c10_figures());
    return results;
}

nlohmann::json acceptance_report_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const CheckResult& r : results) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"values", r.values}});
        all = all && r.passed;
    }
    return {{"checks", checks}, {"all_passed", all}};
}

}  // namespace eigendist
