#include "topix/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace topix {

namespace {

void put_if_finite(nlohmann::json& obj, const char* key, double value) {
    if (std::isfinite(value)) obj[key] = value;
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

nlohmann::json report_document(const ExperimentReport& report, const nlohmann::json& config_echo) {
    nlohmann::json theory;
    put_if_finite(theory, "sigma_sq", report.theory_sigma_sq);
    put_if_finite(theory, "pair_sum_sigma_sq", report.pair_sum_sigma_sq);
    put_if_finite(theory, "expectation_approx", report.expectation_approx);
    put_if_finite(theory, "c1_ratio", report.c1_ratio);
    theory["branch"] = report.branch;

    nlohmann::json empirical;
    put_if_finite(empirical, "mean", report.sample_mean);
    put_if_finite(empirical, "variance", report.sample_variance);
    put_if_finite(empirical, "variance_ratio", report.variance_ratio);
    put_if_finite(empirical, "skewness", report.skewness);
    put_if_finite(empirical, "excess_kurtosis", report.excess_kurtosis);
    put_if_finite(empirical, "ks_statistic", report.ks);
    put_if_finite(empirical, "ks_critical_5pct", report.ks_critical);
    empirical["normal_verdict"] = report.normal_verdict;

    nlohmann::json doc;
    doc["config"] = config_echo;
    doc["theory"] = theory;
    doc["empirical"] = empirical;
    doc["warnings"] = report.warnings;
    doc["version"] = kReportVersion;
    return doc;
}

std::string replicates_csv(const ExperimentReport& report) {
    std::string out = "replicate,index_value,z_value\n";
    for (std::size_t r = 0; r < report.index_values.size(); ++r) {
        out += std::to_string(r);
        out += ',';
        out += format17(report.index_values[r]);
        out += ',';
        out += r < report.standardized.size() ? format17(report.standardized[r]) : "nan";
        out += '\n';
    }
    return out;
}

std::string phase_csv(const std::vector<PhaseSweepRow>& rows) {
    std::string out = "tau,n,p,empirical_var,theory_var,fitted_exponent\n";
    for (const auto& row : rows) {
        out += format17(row.tau);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += format17(row.p);
        out += ',';
        out += format17(row.empirical_var);
        out += ',';
        out += format17(row.theory_var);
        out += ',';
        out += format17(row.fitted_exponent);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace topix
