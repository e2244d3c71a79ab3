#include "eigendist/system_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eigendist {

using nlohmann::json;

json system_to_json(const HomogeneousSystem& f, const std::string& basis) {
    if (basis != "monomial" && basis != "weyl") {
        throw std::invalid_argument("system_to_json: basis must be 'monomial' or 'weyl'");
    }
    json j;
    j["n"] = f.num_vars();
    j["d"] = f.degree();
    j["basis"] = basis;
    json comps = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const HomogeneousPoly& p = f.component(i);
        const std::vector<cplx> coeffs =
            (basis == "weyl") ? p.weyl_coeffs() : p.monomial_coeffs();
        json entries = json::array();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == cplx(0.0, 0.0)) continue;
            json entry = json::array();
            entry.push_back(p.indices()[k].exponents);
            entry.push_back(coeffs[k].real());
            entry.push_back(coeffs[k].imag());
            entries.push_back(std::move(entry));
        }
        comps.push_back(std::move(entries));
    }
    j["coeffs"] = std::move(comps);
    return j;
}

HomogeneousSystem system_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const std::string basis = j.value("basis", "monomial");
    if (basis != "monomial" && basis != "weyl") {
        throw std::invalid_argument("system_from_json: basis must be 'monomial' or 'weyl'");
    }
    const json& comps = j.at("coeffs");
    if (static_cast<int>(comps.size()) != n) {
        throw std::invalid_argument("system_from_json: expected n component arrays");
    }
    const std::size_t k = multi_index_count(n, d);
    std::vector<HomogeneousPoly> polys;
    polys.reserve(static_cast<std::size_t>(n));
    for (const json& entries : comps) {
        std::vector<cplx> dense(k, cplx(0.0, 0.0));
        for (const json& entry : entries) {
            MultiIndex alpha{entry.at(0).get<std::vector<int>>()};
            const std::size_t pos = multi_index_position(n, d, alpha);
            if (pos >= k) throw std::invalid_argument("system_from_json: bad multi-index");
            dense[pos] = cplx(entry.at(1).get<double>(), entry.at(2).get<double>());
        }
        polys.push_back(basis == "weyl" ? HomogeneousPoly::from_weyl_coeffs(n, d, dense)
                                        : HomogeneousPoly::from_monomial_coeffs(n, d, dense));
    }
    return HomogeneousSystem(std::move(polys));
}

HomogeneousSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system file: " + path);
    json j;
    in >> j;
    return system_from_json(j);
}

void write_system_file(const std::string& path, const HomogeneousSystem& f,
                       const std::string& basis) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write system file: " + path);
    out << system_to_json(f, basis).dump(2) << "\n";
}

json class_set_to_json(const EigenClassSet& set) {
    json j;
    json classes = json::array();
    for (std::size_t i = 0; i < set.representatives.size(); ++i) {
        const EigenPair& pair = set.representatives[i];
        json v = json::array();
        for (Eigen::Index row = 0; row < pair.v.size(); ++row) {
            v.push_back({pair.v(row).real(), pair.v(row).imag()});
        }
        classes.push_back({{"v", std::move(v)},
                           {"lambda", {pair.lambda.real(), pair.lambda.imag()}},
                           {"residual", set.residuals[i]}});
    }
    j["classes"] = std::move(classes);
    j["count"] = set.representatives.size();
    j["valid"] = set.valid;
    if (!set.message.empty()) j["message"] = set.message;
    return j;
}

EigenClassSet class_set_from_json(const json& j) {
    EigenClassSet set;
    set.valid = j.at("valid").get<bool>();
    set.message = j.value("message", "");
    for (const json& cls : j.at("classes")) {
        const json& v = cls.at("v");
        EigenPair pair;
        pair.v = Eigen::VectorXcd(static_cast<Eigen::Index>(v.size()));
        for (std::size_t row = 0; row < v.size(); ++row) {
            pair.v(static_cast<Eigen::Index>(row)) =
                cplx(v[row].at(0).get<double>(), v[row].at(1).get<double>());
        }
        pair.lambda = cplx(cls.at("lambda").at(0).get<double>(), cls.at("lambda").at(1).get<double>());
        set.representatives.push_back(std::move(pair));
        set.residuals.push_back(cls.at("residual").get<double>());
    }
    if (j.at("count").get<std::size_t>() != set.representatives.size()) {
        throw std::invalid_argument("class_set_from_json: count mismatch");
    }
    return set;
}

json gof_report_to_json(const GofReport& report) {
    return json{{"sample_size", report.sample_size},
                {"ks_statistic", report.ks_statistic},
                {"ks_critical_1pct", report.ks_critical_1pct},
                {"empirical_mean_modsq", report.empirical_mean_modsq},
                {"theoretical_mean_modsq", report.theoretical_mean_modsq},
                {"standard_error", report.standard_error},
                {"skip_count", report.skip_count},
                {"passed", report.passed}};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace eigendist
