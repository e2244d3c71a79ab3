// Command-line front end: sampling, density tables, expectations, Monte
// Carlo validation, figure-data reproduction, and the acceptance suite.
// All output is plot-ready CSV or JSON; every command is deterministic
// under fixed --seed.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigendist/density.hpp"
#include "eigendist/figures.hpp"
#include "eigendist/oracle.hpp"
#include "eigendist/random.hpp"
#include "eigendist/stats.hpp"
#include "eigendist/system_io.hpp"
#include "eigendist/validate.hpp"

namespace {

using namespace eigendist;

std::unique_ptr<std::ostream> open_output(const std::string& path) {
    if (path.empty() || path == "-") return nullptr;  // nullptr means stdout
    auto out = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::ostream& resolve(std::unique_ptr<std::ostream>& owned) {
    return owned ? *owned : std::cout;
}

int cmd_sample(int n, double d, long samples, std::uint64_t seed, bool modulus_only,
               const std::string& out_path) {
    SeededGenerator gen(seed);
    auto owned = open_output(out_path);
    std::ostream& out = resolve(owned);
    if (modulus_only) {
        out << "modsq\n";
        for (long i = 0; i < samples; ++i) {
            out << format_double(sample_eigenvalue_modulus_sq(n, d, gen)) << "\n";
        }
    } else {
        out << "re,im\n";
        for (long i = 0; i < samples; ++i) {
            const std::complex<double> lambda = sample_eigenvalue(n, d, gen);
            out << format_double(lambda.real()) << "," << format_double(lambda.imag()) << "\n";
        }
    }
    return 0;
}

int cmd_density(int n, double d, double grid_max, double grid_step, bool normalized,
                const std::string& out_path) {
    const DistributionParams params{n, d};
    auto owned = open_output(out_path);
    std::ostream& out = resolve(owned);
    out << (normalized ? "tau,rho_norm" : "R,rho") << "\n";
    for (double x = 0.0; x <= grid_max + 1e-12; x += grid_step) {
        const double rho = normalized ? density_normalized(params, x) : density_radial(params, x);
        out << format_double(x) << "," << format_double(rho) << "\n";
    }
    return 0;
}

int cmd_expectation(int n, double d, const std::string& out_path) {
    auto owned = open_output(out_path);
    std::ostream& out = resolve(owned);
    out << "n,d,mean_modsq\n";
    out << n << "," << format_double(d) << ","
        << format_double(expectation_modulus_sq({n, d})) << "\n";
    return 0;
}

int cmd_montecarlo(int n, int d, long systems, std::uint64_t seed, const std::string& mode_name,
                   int threads, const std::string& out_path) {
    const CampaignMode mode =
        (mode_name == "pooled") ? CampaignMode::pooled : CampaignMode::uniform_pick;
    EmpiricalSample sample;
    try {
        sample = mc_eigen_campaign(n, d, systems, mode, seed, threads);
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (!out_path.empty()) {
        std::ofstream csv(out_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot open output file: " + out_path);
        csv << "Rsq\n";
        for (double R : sample.values) csv << format_double(R) << "\n";
    }
    const GofReport report = moment_check(sample, {n, static_cast<double>(d)});
    std::cout << gof_report_to_json(report).dump(2) << "\n";
    return report.passed ? 0 : 1;
}

int cmd_detcheck(int m, double t_re, double t_im, long samples, std::uint64_t seed) {
    SeededGenerator gen(seed);
    const GofReport report = mc_det_identity(m, {t_re, t_im}, samples, gen);
    std::cout << gof_report_to_json(report).dump(2) << "\n";
    return report.passed ? 0 : 1;
}

int cmd_figures(const std::string& out_dir) {
    const std::string prefix = out_dir.empty() ? "" : out_dir + "/";
    write_figure_csv(prefix + "fig1_left.csv", figure1_left());
    write_figure_csv(prefix + "fig1_right.csv", figure1_right());
    write_figure_csv(prefix + "fig2_left.csv", figure2_left());
    write_figure_csv(prefix + "fig2_right.csv", figure2_right());
    return 0;
}

int cmd_solve(const std::string& in_path, const std::string& out_path, const std::string& method,
              std::uint64_t seed) {
    const HomogeneousSystem f = read_system_file(in_path);
    SeededGenerator gen(seed);
    EigenClassSet set;
    if (method == "d1" || (method == "auto" && f.degree() == 1)) {
        Eigen::MatrixXcd A(f.num_vars(), f.num_vars());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::vector<cplx>& coeffs = f.component(i).monomial_coeffs();
            for (int j = 0; j < f.num_vars(); ++j) {
                A(static_cast<Eigen::Index>(i), j) = coeffs[static_cast<std::size_t>(j)];
            }
        }
        set = eigenpairs_d1(A);
    } else if (method == "binary" || (method == "auto" && f.num_vars() == 2)) {
        set = eigenpairs_binary(f);
    } else {
        set = eigenpairs_homotopy(f, HomotopyConfig{}, gen);
    }
    const nlohmann::json j = class_set_to_json(set);
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
    return set.valid ? 0 : 1;
}

int cmd_validate(int threads, bool inject_weight_error, const std::string& out_path) {
    AcceptanceOptions options;
    options.threads = threads;
    options.inject_weight_error = inject_weight_error;
    const std::vector<CheckResult> results = run_acceptance_suite(options);
    const nlohmann::json report = acceptance_report_json(results);
    for (const CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return report.at("all_passed").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigendist: eigenvalue statistics of random homogeneous polynomial systems"};
    app.require_subcommand(1);

    int n = 2;
    double deg = 2.0;
    int deg_int = 2;
    long samples = 10000;
    std::uint64_t seed = 42;
    double grid_max = 20.0;
    double grid_step = 0.1;
    int threads = 0;
    std::string out_path;
    bool modulus_only = false;
    bool normalized = false;

    CLI::App* sample = app.add_subcommand("sample", "draw eigenvalues from the closed-form law");
    sample->add_option("--n", n, "number of variables")->required();
    sample->add_option("--deg", deg, "degree (real >= 1 allowed)")->check(CLI::Range(1.0, 1e9));
    sample->add_option("--samples", samples, "number of draws");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_flag("--modulus-only", modulus_only, "emit |lambda|^2 instead of re,im");
    sample->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* density = app.add_subcommand("density", "tabulate the radial or normalized density");
    density->add_option("--n", n, "number of variables")->required();
    density->add_option("--deg", deg, "degree (real >= 1 allowed)")->check(CLI::Range(1.0, 1e9));
    density->add_option("--grid-max", grid_max, "largest grid point");
    density->add_option("--grid-step", grid_step, "grid spacing");
    density->add_flag("--normalized", normalized, "emit tau,rho_norm instead of R,rho");
    density->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* expectation = app.add_subcommand("expectation", "closed-form E|lambda|^2");
    expectation->add_option("--n", n, "number of variables")->required();
    expectation->add_option("--deg", deg, "degree (real >= 1 allowed)")->check(CLI::Range(1.0, 1e9));
    expectation->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* montecarlo =
        app.add_subcommand("montecarlo", "solve random systems and compare with the theory");
    std::string mode = "uniform_pick";
    montecarlo->add_option("--n", n, "number of variables")->required();
    montecarlo->add_option("--deg", deg_int, "degree (integer; an oracle must exist)")
        ->check(CLI::Range(1, 16));
    montecarlo->add_option("--samples", samples, "number of random systems");
    montecarlo->add_option("--seed", seed, "RNG seed");
    montecarlo->add_option("--mode", mode, "uniform_pick or pooled")
        ->check(CLI::IsMember({"uniform_pick", "pooled"}));
    montecarlo->add_option("--threads", threads, "worker threads (0 = hardware)");
    montecarlo->add_option("--out", out_path, "CSV path for the R = 2|lambda|^2 draws");

    CLI::App* detcheck = app.add_subcommand("detcheck", "Monte Carlo determinant identity");
    int m = 2;
    double t_re = 0.0, t_im = 0.0;
    detcheck->add_option("--m", m, "matrix size (1..6)")->check(CLI::Range(1, 6));
    detcheck->add_option("--t-re", t_re, "shift, real part");
    detcheck->add_option("--t-im", t_im, "shift, imaginary part");
    detcheck->add_option("--samples", samples, "number of draws");
    detcheck->add_option("--seed", seed, "RNG seed");

    CLI::App* figures = app.add_subcommand("figures", "write the four figure CSV files");
    std::string out_dir;
    figures->add_option("--out-dir", out_dir, "directory for the CSV files (default .)");

    CLI::App* solve = app.add_subcommand("solve", "compute all eigenvalue classes of a system file");
    std::string in_path;
    std::string method = "auto";
    solve->add_option("--in", in_path, "system JSON path")->required();
    solve->add_option("--out", out_path, "class-set JSON path (default stdout)");
    solve->add_option("--method", method, "auto, d1, binary, or homotopy")
        ->check(CLI::IsMember({"auto", "d1", "binary", "homotopy"}));
    solve->add_option("--seed", seed, "RNG seed (homotopy gamma)");

    CLI::App* validate = app.add_subcommand("validate", "run the fixed-seed acceptance suite");
    bool inject_weight_error = false;
    validate->add_option("--threads", threads, "worker threads (0 = hardware)");
    validate->add_option("--out", out_path, "JSON report path (default stdout)");
    validate->add_flag("--inject-weight-error", inject_weight_error,
                       "test hook: corrupt one mixture weight; the run must then fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) return cmd_sample(n, deg, samples, seed, modulus_only, out_path);
        if (density->parsed())
            return cmd_density(n, deg, grid_max, grid_step, normalized, out_path);
        if (expectation->parsed()) return cmd_expectation(n, deg, out_path);
        if (montecarlo->parsed())
            return cmd_montecarlo(n, deg_int, samples, seed, mode, threads, out_path);
        if (detcheck->parsed()) return cmd_detcheck(m, t_re, t_im, samples, seed);
        if (figures->parsed()) return cmd_figures(out_dir);
        if (solve->parsed()) return cmd_solve(in_path, out_path, method, seed);
        if (validate->parsed()) return cmd_validate(threads, inject_weight_error, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
