#pragma once

#include <string>

#include <json.hpp>

#include "topix/simulate.hpp"

// Report serialization. All numeric fields in the JSON document are finite;
// unavailable statistics are omitted and explained in the warnings array.

namespace topix {

inline constexpr const char* kReportVersion = "1.0.0";

// Assembles the report document: {config, theory, empirical, warnings, version}.
nlohmann::json report_document(const ExperimentReport& report, const nlohmann::json& config_echo);

// CSV with header "replicate,index_value,z_value", one replicate per line,
// 17 significant digits. Missing standardized values serialize as "nan".
std::string replicates_csv(const ExperimentReport& report);

// CSV with header "tau,n,p,empirical_var,theory_var,fitted_exponent".
std::string phase_csv(const std::vector<PhaseSweepRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace topix
