#include "topix/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "topix/kahan.hpp"
#include "topix/parallel.hpp"
#include "topix/stats.hpp"

namespace topix {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kCriticalTauTolerance = 1e-6;

bool is_randic_family(const IndexFamily& family) {
    return family.name == "randic" || family.name == "general-randic";
}

bool is_critical_randic(const IndexFamily& family) {
    return is_randic_family(family) && family.parameter &&
           std::abs(*family.parameter + 0.5) < kCriticalTauTolerance;
}

} // namespace

double leading_term_z(const SampledGraph& graph, const WeightModel& model, const TheoreticalMoments& moments) {
    if (!(moments.sigma_sq > 0.0)) throw std::invalid_argument("leading_term_z: sigma_sq must be positive");
    if (graph.n() != model.n() || moments.n != model.n()) {
        throw std::invalid_argument("leading_term_z: size mismatch");
    }
    const int n = model.n();
    KahanSum sum;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pair = moments.coefficient(i, j) + moments.coefficient(j, i);
            const double indicator = graph.edge(i, j) ? 1.0 : 0.0;
            sum.add(pair * (indicator - model.edge_probability(i, j)));
        }
    }
    return sum.value() / std::sqrt(moments.sigma_sq);
}

ExperimentReport run_experiment(const WeightModel& model, const IndexFamily& family, const ExperimentConfig& config) {
    if (config.replicates < 1) throw std::invalid_argument("run_experiment: replicates must be positive");
    const int r_count = config.replicates;
    const bool critical = is_critical_randic(family);
    const bool homogeneous = model.constant_weights();
    if (config.scale == ScaleMode::critical_branch && !(critical && homogeneous && model.n() >= 3)) {
        throw std::invalid_argument(
            "run_experiment: the critical-branch scale applies only to the homogeneous critical general-randic case");
    }

    ExperimentReport report;
    const TheoreticalMoments moments = theoretical_moments(model, family);
    report.pair_sum_sigma_sq = moments.sigma_sq;
    report.expectation_approx = moments.expectation_approx;
    report.c1_ratio = moments.c1_ratio;
    if (config.leading_term && !(moments.sigma_sq > 0.0)) {
        throw std::invalid_argument("run_experiment: the linear statistic needs a positive pair-sum variance");
    }

    report.index_values.assign(static_cast<std::size_t>(r_count), 0.0);
    if (config.leading_term) report.leading_z.assign(static_cast<std::size_t>(r_count), 0.0);
    parallel_for_index(r_count, config.threads, [&](std::int64_t r) {
        const SampledGraph g = sample_graph(model, {config.master_seed, static_cast<std::uint64_t>(r)});
        report.index_values[static_cast<std::size_t>(r)] = compute_index(g, family);
        if (config.leading_term) {
            report.leading_z[static_cast<std::size_t>(r)] = leading_term_z(g, model, moments);
        }
    });

    report.sample_mean = sample_mean(report.index_values);
    const SummaryMoments summary = summary_moments(report.index_values);
    report.sample_variance = summary.variance;
    report.skewness = summary.skewness;
    report.excess_kurtosis = summary.excess_kurtosis;
    if (r_count < 2) {
        report.warnings.push_back("replicates < 2: variance statistics unavailable");
    }

    // Resolve the scaling variance. Closed-form branches apply to any
    // constant-weight model through the effective probability p * w. The
    // near-critical guard is wider (1e-6) than the branch-selection rule
    // (1e-12), so the substitution pins tau to the critical point itself.
    const double p_eff = model.edge_probability(0, 1);
    const auto critical_sigma_sq = [&] { return er_randic_sigma_sq(model.n(), p_eff, -0.5).sigma_sq; };
    double sigma_sq = kNan;
    report.theory_sigma_sq = kNan;
    switch (config.scale) {
        case ScaleMode::pair_sum_sigma:
            if (!critical) {
                sigma_sq = moments.sigma_sq;
                report.branch = "pair-sum";
            } else if (homogeneous && model.n() >= 3) {
                sigma_sq = critical_sigma_sq();
                report.branch = "critical-branch";
                report.warnings.push_back(
                    "pair-sum variance has the wrong growth order for general-randic at tau = -1/2; "
                    "substituted the critical-branch closed form");
            } else if (!homogeneous) {
                report.branch = "empirical-sd";
                report.warnings.push_back(
                    "no theoretical sigma for heterogeneous critical case; scaling by the sample standard deviation");
            } else {
                report.branch = "empirical-sd";
                report.warnings.push_back(
                    "closed-form critical variance needs at least three nodes; scaling by the sample standard deviation");
            }
            break;
        case ScaleMode::critical_branch:
            sigma_sq = critical_sigma_sq();
            report.branch = "critical-branch";
            break;
        case ScaleMode::empirical_sd:
            report.branch = "empirical-sd";
            break;
    }

    report.sigma_used = kNan;
    if (report.branch == "empirical-sd") {
        if (r_count >= 2 && report.sample_variance > 0.0) {
            report.sigma_used = std::sqrt(report.sample_variance);
        } else {
            report.warnings.push_back("empirical scale unavailable: sample variance is zero or undefined");
        }
    } else {
        report.theory_sigma_sq = sigma_sq;
        report.sigma_used = std::sqrt(sigma_sq);
    }

    report.variance_ratio = report.sample_variance / report.theory_sigma_sq;

    report.center_used = report.sample_mean;
    if (config.center == CenterMode::theoretical_approx) {
        report.center_used = moments.expectation_approx;
        report.warnings.push_back("theoretical centering uses the leading expectation factor; "
                                  "its relative bias is of order 1/(n p)");
    }

    report.ks = kNan;
    report.ks_critical = 1.358 / std::sqrt(static_cast<double>(r_count));
    if (std::isfinite(report.sigma_used) && report.sigma_used > 0.0) {
        report.standardized = standardize(report.index_values, report.center_used, report.sigma_used);
        report.ks = ks_statistic(report.standardized);
    }
    report.normal_verdict = std::isfinite(report.ks) && report.ks <= report.ks_critical &&
                            std::isfinite(report.skewness) && std::abs(report.skewness) <= config.skew_threshold &&
                            std::isfinite(report.excess_kurtosis) &&
                            std::abs(report.excess_kurtosis) <= config.kurtosis_threshold;
    return report;
}

std::vector<PhaseSweepRow> phase_sweep(const std::vector<double>& taus, const std::vector<int>& ns, double alpha,
                                       int replicates, std::uint64_t master_seed, int threads) {
    if (taus.empty()) throw std::invalid_argument("phase_sweep: tau grid is empty");
    for (double t : taus) {
        if (t == 0.0) throw std::invalid_argument("phase_sweep: tau must be non-zero");
    }
    if (ns.size() < 2) throw std::invalid_argument("phase_sweep: need at least two n values to fit an exponent");
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (ns[k] < 3) throw std::invalid_argument("phase_sweep: n must be at least 3");
        if (k > 0 && ns[k] <= ns[k - 1]) throw std::invalid_argument("phase_sweep: n grid must be increasing");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("phase_sweep: alpha must lie in (0,1)");
    if (replicates < 2) throw std::invalid_argument("phase_sweep: need at least two replicates");

    std::vector<IndexFamily> families;
    families.reserve(taus.size());
    for (double t : taus) families.push_back(general_randic(t));

    // empirical_var[t][k] for tau index t and n index k
    std::vector<std::vector<double>> emp(taus.size(), std::vector<double>(ns.size(), 0.0));
    std::vector<std::vector<double>> theory(taus.size(), std::vector<double>(ns.size(), 0.0));

    for (std::size_t k = 0; k < ns.size(); ++k) {
        const int n = ns[k];
        const double p = std::pow(static_cast<double>(n), -alpha);
        const WeightModel model = weights_er(n, p);
        std::vector<std::vector<double>> values(taus.size(),
                                                std::vector<double>(static_cast<std::size_t>(replicates), 0.0));
        parallel_for_index(replicates, threads, [&](std::int64_t r) {
            const SampledGraph g = sample_graph(model, {master_seed, static_cast<std::uint64_t>(r)});
            const std::vector<int> deg = degrees(g);
            // One pass over the edges per tau; the graph is shared across taus.
            std::vector<KahanSum> sums(taus.size());
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (!g.edge(i, j)) continue;
                    const double di = static_cast<double>(deg[i]);
                    const double dj = static_cast<double>(deg[j]);
                    for (std::size_t t = 0; t < taus.size(); ++t) {
                        sums[t].add(families[t].f(di, dj));
                    }
                }
            }
            for (std::size_t t = 0; t < taus.size(); ++t) {
                values[t][static_cast<std::size_t>(r)] = sums[t].value();
            }
        });
        for (std::size_t t = 0; t < taus.size(); ++t) {
            emp[t][k] = sample_variance(values[t]);
            theory[t][k] = er_randic_sigma_sq(n, p, taus[t]).sigma_sq;
        }
    }

    std::vector<PhaseSweepRow> rows;
    rows.reserve(taus.size() * ns.size());
    std::vector<double> ns_real(ns.begin(), ns.end());
    for (std::size_t t = 0; t < taus.size(); ++t) {
        const LogLogFit fit = fit_log_slope(ns_real, emp[t]);
        for (std::size_t k = 0; k < ns.size(); ++k) {
            PhaseSweepRow row;
            row.tau = taus[t];
            row.n = ns[k];
            row.p = std::pow(static_cast<double>(ns[k]), -alpha);
            row.empirical_var = emp[t][k];
            row.theory_var = theory[t][k];
            row.fitted_exponent = fit.slope;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace topix
