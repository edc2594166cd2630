#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topix/edge_list.hpp"
#include "topix/graph_model.hpp"
#include "topix/index_family.hpp"
#include "topix/moments.hpp"
#include "topix/oracle.hpp"
#include "topix/report.hpp"
#include "topix/simulate.hpp"

namespace {

using nlohmann::json;

struct ModelOptions {
    std::string type = "er"; // er | exp | matrix
    int n = 0;
    double p = -1.0;
    double alpha_p = -1.0; // er shortcut: p = n^(-alpha_p)
    double alpha = -1.0;   // exp-kernel exponent
    double kappa = 0.0;
    std::string weights_path;
    double beta = -1.0;
};

void add_model_flags(CLI::App* cmd, ModelOptions& opts) {
    cmd->add_option("--model", opts.type, "model type: er | exp | matrix")->default_val("er");
    cmd->add_option("--n", opts.n, "node count");
    cmd->add_option("--p", opts.p, "edge probability (er/matrix models)");
    cmd->add_option("--alpha-p", opts.alpha_p, "er shortcut: p = n^(-alpha)");
    cmd->add_option("--alpha", opts.alpha, "exp-kernel exponent: p = n^(-alpha)");
    cmd->add_option("--kappa", opts.kappa, "exp-kernel weight decay");
    cmd->add_option("--weights", opts.weights_path, "weight matrix file (matrix model)");
    cmd->add_option("--beta", opts.beta, "weight lower bound (matrix model)");
}

topix::WeightModel build_model(const ModelOptions& opts, json& echo) {
    echo["type"] = opts.type;
    if (opts.type == "er") {
        if (opts.n < 2) throw std::invalid_argument("er model: --n must be at least 2");
        const bool has_p = opts.p >= 0.0;
        const bool has_alpha = opts.alpha_p >= 0.0;
        if (has_p == has_alpha) {
            throw std::invalid_argument("er model: give exactly one of --p or --alpha-p");
        }
        const double p = has_p ? opts.p : std::pow(static_cast<double>(opts.n), -opts.alpha_p);
        echo["n"] = opts.n;
        echo["p"] = p;
        if (has_alpha) echo["alpha_p"] = opts.alpha_p;
        return topix::weights_er(opts.n, p);
    }
    if (opts.type == "exp") {
        if (opts.n < 2) throw std::invalid_argument("exp model: --n must be at least 2");
        if (opts.alpha < 0.0) throw std::invalid_argument("exp model: --alpha is required");
        echo["n"] = opts.n;
        echo["alpha"] = opts.alpha;
        echo["kappa"] = opts.kappa;
        return topix::weights_exp_kernel(opts.n, opts.alpha, opts.kappa);
    }
    if (opts.type == "matrix") {
        if (opts.weights_path.empty()) throw std::invalid_argument("matrix model: --weights is required");
        if (opts.p < 0.0) throw std::invalid_argument("matrix model: --p is required");
        if (opts.beta < 0.0) throw std::invalid_argument("matrix model: --beta is required");
        echo["weights"] = opts.weights_path;
        echo["p"] = opts.p;
        echo["beta"] = opts.beta;
        return topix::weights_from_matrix(opts.p, topix::load_matrix(opts.weights_path), opts.beta);
    }
    throw std::invalid_argument("unknown model type '" + opts.type + "'");
}

// Closed-form extras available on constant-weight models, keyed by the
// effective edge probability p*w.
void add_closed_forms(json& theory, const topix::WeightModel& model, const topix::IndexFamily& family) {
    if (!model.constant_weights() || model.n() < 3) return;
    const double p_eff = model.edge_probability(0, 1);
    if (family.name == "hyper-zagreb") {
        theory["exact_expectation"] = topix::er_hyper_zagreb_expectation_exact(model.n(), p_eff);
    } else if (family.name == "forgotten") {
        theory["exact_expectation"] = topix::er_forgotten_expectation_exact(model.n(), p_eff);
    } else if (family.name == "isi") {
        theory["expectation_leading"] = topix::er_isi_expectation_approx(model.n(), p_eff);
    } else if (family.name == "randic" || family.name == "general-randic") {
        const topix::RandicVariance rv = topix::er_randic_sigma_sq(model.n(), p_eff, *family.parameter);
        theory["closed_form_sigma_sq"] = rv.sigma_sq;
        theory["closed_form_branch"] = rv.branch == topix::RandicBranch::critical ? "critical" : "regular";
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        topix::write_text_file(out_path, text);
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"degree-based topological indices of heterogeneous random graphs"};
    app.require_subcommand(1);

    // ---- index ----------------------------------------------------------
    auto* cmd_index = app.add_subcommand("index", "compute the index of an edge-list graph");
    std::string graph_path, family_spec;
    cmd_index->add_option("--graph", graph_path, "edge list file")->required();
    cmd_index->add_option("--family", family_spec, "index family")->required();
    cmd_index->callback([&] {
        const topix::IndexFamily family = topix::family_from_spec(family_spec);
        const topix::SampledGraph g = topix::load_edge_list(graph_path);
        std::printf("%.12g\n", topix::compute_index(g, family));
    });

    // ---- theory ---------------------------------------------------------
    auto* cmd_theory = app.add_subcommand("theory", "theoretical moments for a model/family pair");
    ModelOptions theory_model;
    std::string theory_family, theory_out;
    add_model_flags(cmd_theory, theory_model);
    cmd_theory->add_option("--family", theory_family, "index family")->required();
    cmd_theory->add_option("--out", theory_out, "output JSON path (stdout if omitted)");
    cmd_theory->callback([&] {
        const topix::IndexFamily family = topix::family_from_spec(theory_family);
        json config;
        config["family"] = theory_family;
        json model_echo;
        const topix::WeightModel model = build_model(theory_model, model_echo);
        config["model"] = model_echo;

        const topix::TheoreticalMoments moments = topix::theoretical_moments(model, family);
        std::vector<std::string> warnings;
        json theory;
        theory["pair_sum_sigma_sq"] = moments.sigma_sq;
        theory["expectation_approx"] = moments.expectation_approx;
        theory["c1_ratio"] = moments.c1_ratio;
        const bool critical = (family.name == "randic" || family.name == "general-randic") &&
                              family.parameter && std::abs(*family.parameter + 0.5) < 1e-6;
        if (!critical) {
            theory["sigma_sq"] = moments.sigma_sq;
            theory["branch"] = "pair-sum";
        } else if (model.constant_weights() && model.n() >= 3) {
            // substitution pins tau to the critical point (the guard is wider
            // than the branch-selection tolerance)
            theory["sigma_sq"] =
                topix::er_randic_sigma_sq(model.n(), model.edge_probability(0, 1), -0.5).sigma_sq;
            theory["branch"] = "critical-branch";
            warnings.push_back("pair-sum variance has the wrong growth order for general-randic at tau = -1/2; "
                               "substituted the critical-branch closed form");
        } else if (!model.constant_weights()) {
            theory["branch"] = "none";
            warnings.push_back("no theoretical sigma for heterogeneous critical case");
        } else {
            theory["branch"] = "none";
            warnings.push_back("closed-form critical variance needs at least three nodes");
        }
        add_closed_forms(theory, model, family);

        json doc;
        doc["config"] = config;
        doc["theory"] = theory;
        doc["warnings"] = warnings;
        doc["version"] = topix::kReportVersion;
        emit(doc.dump(2) + "\n", theory_out);
    });

    // ---- simulate -------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "replicated Monte Carlo experiment");
    ModelOptions sim_model;
    std::string sim_family, sim_out, sim_report, sim_center = "empirical", sim_scale = "pair-sum";
    int sim_replicates = 0, sim_threads = 0;
    std::uint64_t sim_seed = 0;
    bool sim_leading = false;
    add_model_flags(cmd_sim, sim_model);
    cmd_sim->add_option("--family", sim_family, "index family")->required();
    cmd_sim->add_option("--replicates", sim_replicates, "number of replicates")->required();
    cmd_sim->add_option("--seed", sim_seed, "master seed")->required();
    cmd_sim->add_option("--center", sim_center, "centering: empirical | theory");
    cmd_sim->add_option("--scale", sim_scale, "scaling: pair-sum | critical | empirical");
    cmd_sim->add_option("--threads", sim_threads, "worker count (0 = hardware)");
    cmd_sim->add_flag("--leading-term", sim_leading, "also evaluate the linear statistic per replicate");
    cmd_sim->add_option("--out", sim_out, "CSV output path");
    cmd_sim->add_option("--report", sim_report, "JSON report path");
    cmd_sim->callback([&] {
        const topix::IndexFamily family = topix::family_from_spec(sim_family);
        json config;
        config["family"] = sim_family;
        json model_echo;
        const topix::WeightModel model = build_model(sim_model, model_echo);
        config["model"] = model_echo;
        config["replicates"] = sim_replicates;
        config["seed"] = sim_seed;
        config["center"] = sim_center;
        config["scale"] = sim_scale;

        topix::ExperimentConfig cfg;
        cfg.replicates = sim_replicates;
        cfg.master_seed = sim_seed;
        cfg.threads = sim_threads;
        cfg.leading_term = sim_leading;
        if (sim_center == "empirical") {
            cfg.center = topix::CenterMode::empirical_mean;
        } else if (sim_center == "theory") {
            cfg.center = topix::CenterMode::theoretical_approx;
        } else {
            throw std::invalid_argument("--center must be 'empirical' or 'theory'");
        }
        if (sim_scale == "pair-sum") {
            cfg.scale = topix::ScaleMode::pair_sum_sigma;
        } else if (sim_scale == "critical") {
            cfg.scale = topix::ScaleMode::critical_branch;
        } else if (sim_scale == "empirical") {
            cfg.scale = topix::ScaleMode::empirical_sd;
        } else {
            throw std::invalid_argument("--scale must be 'pair-sum', 'critical' or 'empirical'");
        }

        const topix::ExperimentReport report = topix::run_experiment(model, family, cfg);
        if (!sim_out.empty()) topix::write_text_file(sim_out, topix::replicates_csv(report));
        if (!sim_report.empty()) {
            topix::write_text_file(sim_report, topix::report_document(report, config).dump(2) + "\n");
        }
        std::printf("family=%s R=%d mean=%.6g variance=%.6g variance_ratio=%.4g ks=%.4g "
                    "skew=%.4g exkurt=%.4g branch=%s verdict=%s\n",
                    sim_family.c_str(), sim_replicates, report.sample_mean, report.sample_variance,
                    report.variance_ratio, report.ks, report.skewness, report.excess_kurtosis,
                    report.branch.c_str(), report.normal_verdict ? "normal" : "non-normal");
        for (const std::string& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    });

    // ---- phase ----------------------------------------------------------
    auto* cmd_phase = app.add_subcommand("phase", "variance-order sweep over the Randic exponent");
    std::vector<double> phase_taus{-0.8, -0.5, -0.2, 0.5, 1.0};
    std::vector<int> phase_ns{200, 400, 800, 1600};
    double phase_alpha = 0.3;
    int phase_replicates = 400, phase_threads = 0;
    std::uint64_t phase_seed = 0;
    std::string phase_out;
    cmd_phase->add_option("--taus", phase_taus, "tau grid")->delimiter(',');
    cmd_phase->add_option("--ns", phase_ns, "n grid (increasing)")->delimiter(',');
    cmd_phase->add_option("--alpha", phase_alpha, "p = n^(-alpha)");
    cmd_phase->add_option("--replicates", phase_replicates, "replicates per grid point");
    cmd_phase->add_option("--seed", phase_seed, "master seed");
    cmd_phase->add_option("--threads", phase_threads, "worker count (0 = hardware)");
    cmd_phase->add_option("--out", phase_out, "CSV output path (stdout if omitted)");
    cmd_phase->callback([&] {
        const auto rows = topix::phase_sweep(phase_taus, phase_ns, phase_alpha, phase_replicates,
                                             phase_seed, phase_threads);
        emit(topix::phase_csv(rows), phase_out);
        for (std::size_t i = 0; i < rows.size(); i += phase_ns.size()) {
            std::fprintf(stderr, "tau=%g fitted_exponent=%.4f\n", rows[i].tau, rows[i].fitted_exponent);
        }
    });

    // ---- oracle ---------------------------------------------------------
    auto* cmd_oracle = app.add_subcommand("oracle", "exact moments by exhaustive enumeration (n <= 5)");
    int oracle_n = 0;
    double oracle_p = 0.0;
    std::string oracle_family;
    cmd_oracle->add_option("--n", oracle_n, "node count (at most 5)")->required();
    cmd_oracle->add_option("--p", oracle_p, "edge probability")->required();
    cmd_oracle->add_option("--family", oracle_family, "index family")->required();
    cmd_oracle->callback([&] {
        if (oracle_n > 5) throw std::invalid_argument("oracle: n must be at most 5");
        const topix::IndexFamily family = topix::family_from_spec(oracle_family);
        const topix::WeightModel model = topix::weights_er(oracle_n, oracle_p);
        const topix::ExactMoments exact = topix::enumerate_exact_moments(model, family);
        json doc;
        doc["config"] = {{"n", oracle_n}, {"p", oracle_p}, {"family", oracle_family}};
        doc["expectation"] = exact.expectation;
        doc["variance"] = exact.variance;
        doc["graph_count"] = exact.graph_count;
        doc["total_probability"] = exact.total_probability;
        std::cout << doc.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
