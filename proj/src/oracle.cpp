#include "topix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topix/kahan.hpp"

namespace topix {

ExactMoments enumerate_exact_moments(const WeightModel& model, const IndexFamily& family) {
    const int n = model.n();
    if (n > 5) throw std::invalid_argument("enumerate_exact_moments: n must be at most 5");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const int m = static_cast<int>(pairs.size());
    const std::uint64_t graph_count = std::uint64_t{1} << m;

    KahanSum total_p, mean, second;
    for (std::uint64_t code = 0; code < graph_count; ++code) {
        SampledGraph g(n);
        double prob = 1.0;
        for (int k = 0; k < m; ++k) {
            const auto [i, j] = pairs[k];
            const double pw = model.edge_probability(i, j);
            if (code & (std::uint64_t{1} << k)) {
                g.set_edge(i, j, true);
                prob *= pw;
            } else {
                prob *= 1.0 - pw;
            }
        }
        const double value = compute_index(g, family);
        total_p.add(prob);
        mean.add(prob * value);
        second.add(prob * value * value);
    }

    ExactMoments out;
    out.n = n;
    out.graph_count = graph_count;
    out.total_probability = total_p.value();
    out.expectation = mean.value();
    out.variance = std::max(0.0, second.value() - out.expectation * out.expectation);
    return out;
}

PBDistribution pb_pmf(const std::vector<double>& probs) {
    if (probs.empty()) throw std::invalid_argument("pb_pmf: probability list is empty");
    for (double q : probs) {
        if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("pb_pmf: probabilities must lie in [0,1]");
    }
    PBDistribution out;
    out.probs = probs;
    out.pmf.assign(probs.size() + 1, 0.0);
    out.pmf[0] = 1.0;
    std::size_t count = 0;
    for (double q : probs) {
        ++count;
        for (std::size_t k = count; k > 0; --k) {
            out.pmf[k] = out.pmf[k] * (1.0 - q) + out.pmf[k - 1] * q;
        }
        out.pmf[0] *= 1.0 - q;
    }
    return out;
}

double pb_binomial_bound(int n, double p, double beta, int k) {
    if (n < 2) throw std::invalid_argument("pb_binomial_bound: n must be at least 2");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("pb_binomial_bound: p must lie in (0,1)");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("pb_binomial_bound: beta must lie in (0,1]");
    if (k < 0 || k > n - 2) throw std::invalid_argument("pb_binomial_bound: k out of range");
    const double m = static_cast<double>(n - 2);
    const double kd = static_cast<double>(k);
    const double log_choose = std::lgamma(m + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(m - kd + 1.0);
    return std::exp(log_choose + kd * std::log(p) + (m - kd) * std::log1p(-p * beta));
}

EnvelopeReport check_local_degree_envelope(const WeightModel& model, int i, int j) {
    if (i == j) throw std::invalid_argument("check_local_degree_envelope: i and j must differ");
    const int n = model.n();
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(n) - 2);
    for (int l = 0; l < n; ++l) {
        if (l != i && l != j) probs.push_back(model.edge_probability(i, l));
    }
    EnvelopeReport report;
    if (probs.empty()) {
        // n = 2: the reduced degree is deterministically 1
        report.holds = true;
        return report;
    }
    const PBDistribution pb = pb_pmf(probs);
    report.margins.resize(pb.pmf.size());
    report.holds = true;
    for (int k = 0; k < static_cast<int>(pb.pmf.size()); ++k) {
        const double bound = pb_binomial_bound(n, model.p(), model.beta(), k);
        report.margins[static_cast<std::size_t>(k)] = bound - pb.pmf[static_cast<std::size_t>(k)];
        if (report.margins[static_cast<std::size_t>(k)] < -1e-12) report.holds = false;
    }
    return report;
}

} // namespace topix
