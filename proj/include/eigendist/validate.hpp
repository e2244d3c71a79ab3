#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace eigendist {

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json values;
};

struct AcceptanceOptions {
    int threads = 0;
    /// Test hook: perturbs one mixture weight inside the closed-form
    /// equality check so a broken build is guaranteed a nonzero exit.
    bool inject_weight_error = false;
};

/// The full fixed-seed acceptance suite, one entry per criterion.
std::vector<CheckResult> run_acceptance_suite(const AcceptanceOptions& options = {});

nlohmann::json acceptance_report_json(const std::vector<CheckResult>& results);

}  // namespace eigendist
