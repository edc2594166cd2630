#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "topix/graph_model.hpp"
#include "topix/index_family.hpp"
#include "topix/kahan.hpp"
#include "topix/moments.hpp"
#include "topix/oracle.hpp"

using namespace topix;

namespace {

// binomial pmf from Pascal's triangle; exact in double for n <= 20
std::vector<double> binomial_pmf(int n, double p) {
    std::vector<std::vector<double>> choose(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        choose[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1.0);
        for (int j = 1; j < i; ++j) {
            choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                choose[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
                choose[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
        }
    }
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        pmf[static_cast<std::size_t>(k)] = choose[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                                           std::pow(p, k) * std::pow(1.0 - p, n - k);
    }
    return pmf;
}

} // namespace

TEST_CASE("enumeration on two nodes: the index is the edge indicator") {
    const ExactMoments m = enumerate_exact_moments(weights_er(2, 0.5), randic());
    CHECK(m.graph_count == 2);
    CHECK(m.expectation == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.variance == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(m.total_probability == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("enumeration on three nodes reproduces the hand count") {
    // 8 graphs at p = 1/2: empty 0, three single edges 1, three paths sqrt(2),
    // one triangle 3/2; E = (3 + 3 sqrt(2) + 1.5)/8
    const ExactMoments m = enumerate_exact_moments(weights_er(3, 0.5), randic());
    CHECK(m.graph_count == 8);
    CHECK(m.expectation == doctest::Approx(1.0928300858899107).epsilon(1e-12));
}

TEST_CASE("enumeration matches the exact closed-form expectations on four nodes") {
    for (double p : {0.1, 0.5, 0.9}) {
        const WeightModel model = weights_er(4, p);
        const ExactMoments hz = enumerate_exact_moments(model, hyper_zagreb());
        CHECK(hz.expectation ==
              doctest::Approx(er_hyper_zagreb_expectation_exact(4, p)).epsilon(1e-10));
        const ExactMoments fg = enumerate_exact_moments(model, forgotten());
        CHECK(fg.expectation ==
              doctest::Approx(er_forgotten_expectation_exact(4, p)).epsilon(1e-10));
    }
    CHECK(enumerate_exact_moments(weights_er(4, 0.5), hyper_zagreb()).expectation ==
          doctest::Approx(51.0).epsilon(1e-12));
    CHECK(enumerate_exact_moments(weights_er(4, 0.5), forgotten()).expectation ==
          doctest::Approx(27.0).epsilon(1e-12));
}

TEST_CASE("enumeration probabilities always total one") {
    const std::vector<WeightModel> models{
        weights_er(4, 0.2),
        weights_er(5, 0.7),
        weights_exp_kernel(4, 0.4, 1.0),
        weights_from_matrix(0.5, {{0.0, 1.0, 0.4}, {1.0, 0.0, 1.0}, {0.4, 1.0, 0.0}}, 0.4),
    };
    for (const WeightModel& model : models) {
        const ExactMoments m = enumerate_exact_moments(model, randic());
        CHECK(m.total_probability == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.variance >= 0.0);
    }
}

TEST_CASE("enumeration refuses n above 5") {
    CHECK_THROWS_AS(enumerate_exact_moments(weights_er(6, 0.5), randic()), std::invalid_argument);
}

TEST_CASE("Monte Carlo means agree with enumeration across a config matrix") {
    const std::vector<WeightModel> models{
        weights_er(3, 0.5),
        weights_er(4, 0.3),
        weights_er(4, 0.7),
        weights_exp_kernel(4, 0.4, 1.0),
        weights_from_matrix(0.5, {{0.0, 1.0, 0.4}, {1.0, 0.0, 1.0}, {0.4, 1.0, 0.0}}, 0.4),
    };
    const std::vector<IndexFamily> families{randic(), hyper_zagreb(), forgotten(), inverse_sum_indeg()};
    const int reps = 10000;
    int failures = 0, configs = 0;
    std::uint64_t seed = 555;
    for (const WeightModel& model : models) {
        for (const IndexFamily& family : families) {
            ++configs;
            ++seed;
            const ExactMoments exact = enumerate_exact_moments(model, family);
            KahanSum sum;
            for (int r = 0; r < reps; ++r) {
                sum.add(compute_index(sample_graph(model, {seed, static_cast<std::uint64_t>(r)}), family));
            }
            const double mc_mean = sum.value() / reps;
            if (std::abs(mc_mean - exact.expectation) > 4.0 * std::sqrt(exact.variance / reps)) {
                ++failures;
            }
        }
    }
    CHECK(configs == 20);
    CHECK(failures <= 1);
}

TEST_CASE("pb_pmf convolution") {
    const PBDistribution one = pb_pmf({0.5});
    CHECK(one.pmf == std::vector<double>{0.5, 0.5});

    const PBDistribution two = pb_pmf({0.1, 0.2});
    REQUIRE(two.pmf.size() == 3);
    CHECK(two.pmf[0] == doctest::Approx(0.72).epsilon(1e-15));
    CHECK(two.pmf[1] == doctest::Approx(0.26).epsilon(1e-15));
    CHECK(two.pmf[2] == doctest::Approx(0.02).epsilon(1e-15));

    CHECK_THROWS_AS(pb_pmf({}), std::invalid_argument);
    CHECK_THROWS_AS(pb_pmf({0.5, 1.2}), std::invalid_argument);
    CHECK_THROWS_AS(pb_pmf({-0.1}), std::invalid_argument);
}

TEST_CASE("pb_pmf with equal probabilities is the binomial pmf") {
    const std::vector<double> probs(20, 0.3);
    const PBDistribution pb = pb_pmf(probs);
    const std::vector<double> want = binomial_pmf(20, 0.3);
    REQUIRE(pb.pmf.size() == want.size());
    KahanSum total, mean;
    for (std::size_t k = 0; k < pb.pmf.size(); ++k) {
        CHECK(std::abs(pb.pmf[k] - want[k]) <= 1e-12);
        total.add(pb.pmf[k]);
        mean.add(static_cast<double>(k) * pb.pmf[k]);
    }
    CHECK(total.value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean.value() == doctest::Approx(20 * 0.3).epsilon(1e-10));
}

TEST_CASE("pb_binomial_bound values and domain") {
    CHECK(pb_binomial_bound(4, 0.5, 1.0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pb_binomial_bound(50, 0.2, 0.5, 0) == doctest::Approx(0.00636268544113595).epsilon(1e-12));
    CHECK_THROWS_AS(pb_binomial_bound(10, 0.2, 0.5, -1), std::invalid_argument);
    CHECK_THROWS_AS(pb_binomial_bound(10, 0.2, 0.5, 9), std::invalid_argument);
}

TEST_CASE("homogeneous model: the local-degree pmf equals the binomial bound") {
    const WeightModel model = weights_er(30, 0.2);
    std::vector<double> probs;
    for (int l = 2; l < 30; ++l) probs.push_back(model.edge_probability(0, l));
    const PBDistribution pb = pb_pmf(probs);
    for (int k = 0; k <= 28; ++k) {
        const double bound = pb_binomial_bound(30, 0.2, 1.0, k);
        CHECK(std::abs(pb.pmf[static_cast<std::size_t>(k)] - bound) <= 1e-12);
    }
    const EnvelopeReport report = check_local_degree_envelope(model, 0, 1);
    CHECK(report.holds);
}

TEST_CASE("heterogeneous model: the pmf sits strictly below the envelope somewhere") {
    const WeightModel model = weights_exp_kernel(30, 0.3, 1.0);
    const EnvelopeReport report = check_local_degree_envelope(model, 0, 1);
    CHECK(report.holds);
    double max_margin = 0.0;
    for (double m : report.margins) max_margin = std::max(max_margin, m);
    CHECK(max_margin > 1e-6);
}

TEST_CASE("three-node envelope has two cells") {
    const WeightModel model = weights_exp_kernel(3, 0.4, 0.5);
    const EnvelopeReport report = check_local_degree_envelope(model, 0, 2);
    REQUIRE(report.margins.size() == 2);
    CHECK(report.holds);
}
