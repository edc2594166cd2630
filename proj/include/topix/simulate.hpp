#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topix/graph_model.hpp"
#include "topix/index_family.hpp"
#include "topix/moments.hpp"

// Monte Carlo engine: replicated index sampling, standardization against the
// theoretical moments, normality diagnostics, the leading-term linear
// statistic, and the variance-order sweep over the Randic exponent.

namespace topix {

enum class CenterMode { empirical_mean, theoretical_approx };
enum class ScaleMode { pair_sum_sigma, critical_branch, empirical_sd };

struct ExperimentConfig {
    int replicates = 0;
    std::uint64_t master_seed = 0;
    CenterMode center = CenterMode::empirical_mean;
    ScaleMode scale = ScaleMode::pair_sum_sigma;
    int threads = 0;          // 0 = all available (capped by TOPIX_THREADS)
    bool leading_term = false; // also evaluate the linear statistic per replicate
    double skew_threshold = 0.15;
    double kurtosis_threshold = 0.3;
};

struct ExperimentReport {
    std::vector<double> index_values;
    std::vector<double> standardized;
    std::vector<double> leading_z;

    double sample_mean = 0.0;
    double sample_variance = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double ks = 0.0;
    double ks_critical = 0.0; // 1.358/sqrt(R), 5% asymptotic level

    double pair_sum_sigma_sq = 0.0;    // pair-sum variance formula
    double theory_sigma_sq = 0.0; // variance actually used for scaling (NaN if empirical)
    double expectation_approx = 0.0;
    double c1_ratio = 0.0;
    double center_used = 0.0;
    double sigma_used = 0.0;
    double variance_ratio = 0.0; // sample variance / theory_sigma_sq

    std::string branch; // "pair-sum" | "critical-branch" | "empirical-sd"
    bool normal_verdict = false;
    std::vector<std::string> warnings;
};

// Samples replicate r from (master_seed, r), computes the index, standardizes
// and fills the diagnostics. Deterministic for a fixed config; replicates may
// run concurrently with identical results.
ExperimentReport run_experiment(const WeightModel& model, const IndexFamily& family, const ExperimentConfig& config);

// The linear statistic of the pair-sum linearization evaluated on a realized
// adjacency: sum_{i<j} (a_ij + a_ji)(A_ij - p w_ij) / sigma.
double leading_term_z(const SampledGraph& graph, const WeightModel& model, const TheoreticalMoments& moments);

struct PhaseSweepRow {
    double tau = 0.0;
    int n = 0;
    double p = 0.0;
    double empirical_var = 0.0;
    double theory_var = 0.0;       // closed-form branch value
    double fitted_exponent = 0.0;  // log-log slope of empirical_var vs n, per tau
};

// For every (tau, n) grid point: homogeneous model with p = n^(-alpha),
// empirical index variance over the replicates, the closed-form variance, and
// the per-tau fitted growth exponent. Rows are grouped by tau, n ascending.
std::vector<PhaseSweepRow> phase_sweep(const std::vector<double>& taus, const std::vector<int>& ns, double alpha,
                                       int replicates, std::uint64_t master_seed, int threads = 0);

} // namespace topix
