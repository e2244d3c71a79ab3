#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "eigendist/oracle.hpp"
#include "eigendist/polynomial.hpp"
#include "eigendist/stats.hpp"

namespace eigendist {

/// Coefficient file format:
/// {"n": int, "d": int, "basis": "monomial"|"weyl",
///  "coeffs": [ per component, array of [[alpha...], re, im] ]}
/// Missing multi-indices mean zero.
nlohmann::json system_to_json(const HomogeneousSystem& f, const std::string& basis = "monomial");
HomogeneousSystem system_from_json(const nlohmann::json& j);

HomogeneousSystem read_system_file(const std::string& path);
void write_system_file(const std::string& path, const HomogeneousSystem& f,
                       const std::string& basis = "monomial");

/// {"classes": [{"v": [[re,im],...], "lambda": [re,im], "residual": r}, ...],
///  "count": k, "valid": bool}
nlohmann::json class_set_to_json(const EigenClassSet& set);
EigenClassSet class_set_from_json(const nlohmann::json& j);

nlohmann::json gof_report_to_json(const GofReport& report);

/// Doubles printed with 17 significant digits, the round-trip-exact width.
std::string format_double(double x);

}  // namespace eigendist
