#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "topix/simulate.hpp"
#include "topix/stats.hpp"

using namespace topix;

TEST_CASE("run_experiment is deterministic and thread-count independent") {
    const WeightModel model = weights_exp_kernel(18, 0.4, 0.6);
    ExperimentConfig cfg;
    cfg.replicates = 40;
    cfg.master_seed = 2025;
    cfg.threads = 1;
    const ExperimentReport a = run_experiment(model, randic(), cfg);
    const ExperimentReport b = run_experiment(model, randic(), cfg);
    cfg.threads = 3;
    const ExperimentReport c = run_experiment(model, randic(), cfg);
    REQUIRE(a.index_values.size() == 40);
    for (std::size_t r = 0; r < 40; ++r) {
        CHECK(a.index_values[r] == b.index_values[r]);
        CHECK(a.index_values[r] == c.index_values[r]);
    }
    CHECK(a.sample_mean == c.sample_mean);
    CHECK(a.ks == c.ks);
}

TEST_CASE("single replicate reports a value and flags missing variance statistics") {
    ExperimentConfig cfg;
    cfg.replicates = 1;
    cfg.master_seed = 5;
    const ExperimentReport r = run_experiment(weights_er(6, 0.4), hyper_zagreb(), cfg);
    CHECK(r.index_values.size() == 1);
    CHECK(std::isnan(r.sample_variance));
    CHECK(std::isnan(r.variance_ratio));
    bool flagged = false;
    for (const auto& w : r.warnings) {
        if (w.find("variance statistics unavailable") != std::string::npos) flagged = true;
    }
    CHECK(flagged);
}

TEST_CASE("Monte Carlo mean matches the enumeration oracle on four nodes") {
    // exact expectation 51 at n = 4, p = 1/2 for the hyper-Zagreb family
    ExperimentConfig cfg;
    cfg.replicates = 10000;
    cfg.master_seed = 99;
    const ExperimentReport r = run_experiment(weights_er(4, 0.5), hyper_zagreb(), cfg);
    const double se = std::sqrt(r.sample_variance / cfg.replicates);
    CHECK(std::abs(r.sample_mean - 51.0) <= 3.0 * se);
}

TEST_CASE("standardized samples have mean zero under empirical centering") {
    ExperimentConfig cfg;
    cfg.replicates = 200;
    cfg.master_seed = 17;
    const ExperimentReport r = run_experiment(weights_er(30, 0.3), randic(), cfg);
    REQUIRE(!r.standardized.empty());
    CHECK(std::abs(sample_mean(r.standardized)) < 1e-12);
}

TEST_CASE("leading_term_z on the two-node model") {
    const WeightModel model = weights_er(2, 0.5);
    const TheoreticalMoments moments = theoretical_moments(model, randic());
    SampledGraph with_edge(2);
    with_edge.set_edge(0, 1, true);
    const SampledGraph without_edge(2);
    CHECK(leading_term_z(with_edge, model, moments) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(leading_term_z(without_edge, model, moments) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("the linear statistic is centered and tracks the index") {
    const WeightModel model = weights_er(60, 0.3);
    ExperimentConfig cfg;
    cfg.replicates = 400;
    cfg.master_seed = 4242;
    cfg.leading_term = true;
    const ExperimentReport r = run_experiment(model, hyper_zagreb(), cfg);
    REQUIRE(r.leading_z.size() == 400);
    CHECK(std::abs(sample_mean(r.leading_z)) <= 4.0 / std::sqrt(400.0));
    // in the linearization regime the statistic carries most of the variance
    CHECK(pearson_correlation(r.leading_z, r.index_values) > 0.9);
}

TEST_CASE("scale-mode guards for the critical family") {
    // homogeneous critical: the pair-sum scale is silently replaced
    ExperimentConfig cfg;
    cfg.replicates = 30;
    cfg.master_seed = 1;
    const WeightModel er = weights_er(20, 0.3);
    const ExperimentReport r = run_experiment(er, randic(), cfg);
    CHECK(r.branch == "critical-branch");
    CHECK(r.theory_sigma_sq == doctest::Approx(er_randic_sigma_sq(20, 0.3, -0.5).sigma_sq));
    bool warned = false;
    for (const auto& w : r.warnings) {
        if (w.find("wrong growth order") != std::string::npos) warned = true;
    }
    CHECK(warned);

    // heterogeneous critical: no theoretical sigma exists
    const WeightModel het = weights_exp_kernel(20, 0.3, 1.0);
    const ExperimentReport rh = run_experiment(het, randic(), cfg);
    CHECK(rh.branch == "empirical-sd");
    CHECK(std::isnan(rh.theory_sigma_sq));
    bool het_warned = false;
    for (const auto& w : rh.warnings) {
        if (w.find("heterogeneous critical") != std::string::npos) het_warned = true;
    }
    CHECK(het_warned);

    // the critical branch cannot be requested outside its regime
    cfg.scale = ScaleMode::critical_branch;
    CHECK_THROWS_AS(run_experiment(het, randic(), cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment(er, hyper_zagreb(), cfg), std::invalid_argument);
}

TEST_CASE("near-critical tau substitutes the exact critical variance") {
    // tau inside the guard tolerance but outside the branch-selection rule:
    // the substituted sigma must be the critical closed form, not the regular
    // formula with its vanishing (1 + 2 tau)^2 factor
    ExperimentConfig cfg;
    cfg.replicates = 20;
    cfg.master_seed = 6;
    const WeightModel er = weights_er(20, 0.3);
    const ExperimentReport r = run_experiment(er, general_randic(-0.5 + 1e-9), cfg);
    CHECK(r.branch == "critical-branch");
    CHECK(r.theory_sigma_sq ==
          doctest::Approx(er_randic_sigma_sq(20, 0.3, -0.5).sigma_sq).epsilon(1e-14));
}

TEST_CASE("constant-weight matrix models use the effective probability in closed forms") {
    // all off-diagonal weights 0.4: a homogeneous model with p_eff = p * 0.4
    std::vector<std::vector<double>> w(6, std::vector<double>(6, 0.4));
    for (int i = 0; i < 6; ++i) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    const WeightModel model = weights_from_matrix(0.5, w, 0.4);
    REQUIRE(model.constant_weights());
    ExperimentConfig cfg;
    cfg.replicates = 20;
    cfg.master_seed = 2;
    const ExperimentReport r = run_experiment(model, randic(), cfg);
    CHECK(r.branch == "critical-branch");
    CHECK(r.theory_sigma_sq == doctest::Approx(er_randic_sigma_sq(6, 0.2, -0.5).sigma_sq).epsilon(1e-14));
}

TEST_CASE("pair-sum variance also tracks heterogeneous models") {
    const WeightModel model = weights_exp_kernel(150, 0.3, 1.0);
    ExperimentConfig cfg;
    cfg.replicates = 600;
    cfg.master_seed = 31;
    const ExperimentReport r = run_experiment(model, hyper_zagreb(), cfg);
    CHECK(r.branch == "pair-sum");
    CHECK(r.variance_ratio > 0.8);
    CHECK(r.variance_ratio < 1.2);
}

TEST_CASE("non-critical families keep the pair-sum scale") {
    ExperimentConfig cfg;
    cfg.replicates = 600;
    cfg.master_seed = 3;
    const ExperimentReport r = run_experiment(weights_er(150, 0.2), hyper_zagreb(), cfg);
    CHECK(r.branch == "pair-sum");
    CHECK(r.theory_sigma_sq == r.pair_sum_sigma_sq);
    CHECK(r.variance_ratio > 0.8);
    CHECK(r.variance_ratio < 1.2);
}

TEST_CASE("theoretical centering option") {
    ExperimentConfig cfg;
    cfg.replicates = 50;
    cfg.master_seed = 8;
    cfg.center = CenterMode::theoretical_approx;
    const ExperimentReport r = run_experiment(weights_er(25, 0.3), inverse_sum_indeg(), cfg);
    CHECK(r.center_used == r.expectation_approx);
}

TEST_CASE("phase_sweep shapes, reuse and validation") {
    const std::vector<double> taus{-0.5, 1.0};
    const std::vector<int> ns{40, 80};
    const auto rows = phase_sweep(taus, ns, 0.3, 60, 12345, 1);
    REQUIRE(rows.size() == 4);
    // tau-major blocks with ascending n
    CHECK(rows[0].tau == -0.5);
    CHECK(rows[0].n == 40);
    CHECK(rows[1].tau == -0.5);
    CHECK(rows[1].n == 80);
    CHECK(rows[2].tau == 1.0);
    CHECK(rows[3].n == 80);
    for (const auto& row : rows) {
        CHECK(row.p == doctest::Approx(std::pow(static_cast<double>(row.n), -0.3)));
        CHECK(row.empirical_var > 0.0);
        CHECK(row.theory_var > 0.0);
        CHECK(std::isfinite(row.fitted_exponent));
        CHECK(row.fitted_exponent == rows[row.tau == -0.5 ? 0 : 2].fitted_exponent);
    }

    CHECK_THROWS_AS(phase_sweep({1.0}, {100}, 0.3, 50, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(phase_sweep({0.0}, {50, 100}, 0.3, 50, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(phase_sweep({1.0}, {100, 50}, 0.3, 50, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(phase_sweep({1.0}, {50, 100}, 1.2, 50, 1, 1), std::invalid_argument);
}

TEST_CASE("run_experiment validates its configuration") {
    ExperimentConfig cfg;
    cfg.replicates = 0;
    CHECK_THROWS_AS(run_experiment(weights_er(5, 0.5), randic(), cfg), std::invalid_argument);
}
