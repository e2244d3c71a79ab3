#include "eigendist/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eigendist/oracle.hpp"

namespace eigendist {

double ks_statistic(const std::vector<double>& sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    const double N = static_cast<double>(sorted.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double F = cdf(sorted[i]);
        stat = std::max(stat, (static_cast<double>(i) + 1.0) / N - F);
        stat = std::max(stat, F - static_cast<double>(i) / N);
    }
    return stat;
}

double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf) {
    return ks_statistic(sample.values, cdf);
}

namespace {

std::pair<double, double> mean_and_se(const std::vector<double>& xs) {
    const double N = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= N;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= (N - 1.0);
    return {mean, std::sqrt(var / N)};
}

}  // namespace

GofReport moment_check(const EmpiricalSample& sample, const DistributionParams& params) {
    if (sample.values.size() < 100) {
        throw std::invalid_argument("moment_check: need at least 100 draws for a usable SE");
    }
    GofReport report;
    report.sample_size = static_cast<long>(sample.values.size());
    report.skip_count = sample.skipped;
    report.ks_critical_1pct = 1.63 / std::sqrt(static_cast<double>(sample.values.size()));

    std::vector<double> modsq(sample.values.size());
    for (std::size_t i = 0; i < sample.values.size(); ++i) modsq[i] = 0.5 * sample.values[i];
    const auto [mean, se] = mean_and_se(modsq);
    report.empirical_mean_modsq = mean;
    report.standard_error = se;
    report.theoretical_mean_modsq = expectation_modulus_sq(params);

    if (sample.source != SampleSource::oracle_pooled) {
        report.ks_statistic =
            ks_statistic(sample, [&](double R) { return mixture_cdf(params, R); });
    }
    report.passed = report.ks_statistic < report.ks_critical_1pct &&
                    std::abs(report.empirical_mean_modsq - report.theoretical_mean_modsq) <
                        3.0 * report.standard_error;
    return report;
}

namespace {

EigenClassSet solve_system(int n, int d, SeededGenerator& gen) {
    if (d == 1) {
        return eigenpairs_d1(sample_ginibre(n, gen));
    }
    const HomogeneousSystem f = sample_weyl_system(n, d, gen);
    if (n == 2) return eigenpairs_binary(f);
    return eigenpairs_homotopy(f, HomotopyConfig{}, gen);
}

}  // namespace

EmpiricalSample mc_eigen_campaign(int n, int d, long systems, CampaignMode mode,
                                  std::uint64_t base_seed, int threads) {
    if (n < 1 || d < 1 || systems < 1) {
        throw std::invalid_argument("mc_eigen_campaign: need n, d, systems >= 1");
    }
    if (d > 1 && n != 2 && (n > 4 || d > 4)) {
        throw std::invalid_argument("mc_eigen_campaign: homotopy oracle limited to n <= 4, d <= 4");
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }

    std::vector<std::vector<double>> per_system(static_cast<std::size_t>(systems));
    std::vector<char> skipped_flag(static_cast<std::size_t>(systems), 0);
    std::atomic<long> next{0};

    auto worker = [&]() {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= systems) return;
            SeededGenerator gen(derive_stream_seed(base_seed, static_cast<std::uint64_t>(i)));
            const EigenClassSet classes = solve_system(n, d, gen);
            if (!classes.valid || classes.representatives.empty()) {
                skipped_flag[static_cast<std::size_t>(i)] = 1;
                continue;
            }
            std::vector<double>& out = per_system[static_cast<std::size_t>(i)];
            if (mode == CampaignMode::uniform_pick) {
                std::size_t pick =
                    static_cast<std::size_t>(gen.uniform01() * classes.representatives.size());
                if (pick >= classes.representatives.size()) pick = classes.representatives.size() - 1;
                out.push_back(2.0 * std::norm(classes.representatives[pick].lambda));
            } else {
                for (const EigenPair& pair : classes.representatives) {
                    out.push_back(2.0 * std::norm(pair.lambda));
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    EmpiricalSample sample;
    sample.source = (mode == CampaignMode::uniform_pick) ? SampleSource::oracle_uniform_pick
                                                         : SampleSource::oracle_pooled;
    sample.systems = systems;
    for (long i = 0; i < systems; ++i) {
        if (skipped_flag[static_cast<std::size_t>(i)]) {
            ++sample.skipped;
        } else {
            const std::vector<double>& vals = per_system[static_cast<std::size_t>(i)];
            sample.values.insert(sample.values.end(), vals.begin(), vals.end());
        }
    }
    if (static_cast<double>(sample.skipped) > 0.005 * static_cast<double>(systems)) {
        std::ostringstream msg;
        msg << "mc_eigen_campaign aborted: " << sample.skipped << "/" << systems
            << " systems skipped (> 0.5%), solver problem rather than discriminant mass";
        throw std::runtime_error(msg.str());
    }
    return sample;
}

GofReport mc_det_identity(int m, std::complex<double> t, long num_draws, SeededGenerator& gen) {
    if (m < 1 || m > 6) throw std::invalid_argument("mc_det_identity: 1 <= m <= 6");
    if (num_draws < 100) throw std::invalid_argument("mc_det_identity: need at least 100 draws");
    std::vector<double> xs(static_cast<std::size_t>(num_draws));
    for (long i = 0; i < num_draws; ++i) {
        Eigen::MatrixXcd A = sample_ginibre(m, gen);
        A.diagonal().array() += t;
        xs[static_cast<std::size_t>(i)] = std::norm(A.determinant());
    }
    const auto [mean, se] = mean_and_se(xs);
    GofReport report;
    report.sample_size = num_draws;
    report.empirical_mean_modsq = mean;
    report.theoretical_mean_modsq = expected_det_identity(m, t);
    report.standard_error = se;
    report.ks_critical_1pct = 1.63 / std::sqrt(static_cast<double>(num_draws));
    report.passed =
        std::abs(report.empirical_mean_modsq - report.theoretical_mean_modsq) < 3.0 * se;
    return report;
}

double chi_square_gof_statistic(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.empty()) {
        throw std::invalid_argument("chi_square_gof_statistic: size mismatch");
    }
    long total = 0;
    for (long o : observed) total += o;
    double stat = 0.0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        const double expect = static_cast<double>(total) * expected_probs[k];
        if (expect <= 0.0) throw std::invalid_argument("chi_square_gof_statistic: zero expected count");
        const double diff = static_cast<double>(observed[k]) - expect;
        stat += diff * diff / expect;
    }
    return stat;
}

double chi_square_critical_1pct(int dof) {
    switch (dof) {
        case 1: return 6.6348966010212145;
        case 2: return 9.21034037197618;
        case 3: return 11.344866730144373;
        case 4: return 13.276704135987622;
        case 35: return 57.3420734338592;
        default:
            throw std::invalid_argument("chi_square_critical_1pct: dof not in the pinned table");
    }
}

Histogram histogram(const EmpiricalSample& sample, int bins, double range_max) {
    if (bins < 2) throw std::invalid_argument("histogram: bins >= 2 required");
    if (range_max <= 0.0) throw std::invalid_argument("histogram: range_max > 0 required");
    Histogram h;
    h.bin_width = range_max / bins;
    std::vector<long> counts(static_cast<std::size_t>(bins), 0);
    long in_range = 0;
    for (double x : sample.values) {
        const long idx = static_cast<long>(std::floor(x / h.bin_width));
        if (idx < 0 || idx >= bins) {
            ++h.overflow;
        } else {
            ++counts[static_cast<std::size_t>(idx)];
            ++in_range;
        }
    }
    h.bins.reserve(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        const double center = (b + 0.5) * h.bin_width;
        const double density =
            in_range > 0 ? static_cast<double>(counts[static_cast<std::size_t>(b)]) /
                               (static_cast<double>(in_range) * h.bin_width)
                         : 0.0;
        h.bins.emplace_back(center, density);
    }
    return h;
}

}  // namespace eigendist
