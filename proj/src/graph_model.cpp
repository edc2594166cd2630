#include "topix/graph_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "topix/rng.hpp"

namespace topix {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool all_off_diagonal_equal(const std::vector<double>& w, int n) {
    if (n < 2) return true;
    const double first = w[1];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (w[static_cast<std::size_t>(i) * n + j] != first) return false;
        }
    }
    return true;
}

} // namespace

WeightModel::WeightModel(int n, double p, double beta, std::vector<double> weights)
    : n_(n), p_(p), beta_(beta), weights_(std::move(weights)) {
    constant_weights_ = all_off_diagonal_equal(weights_, n_);
}

WeightModel weights_er(int n, double p) {
    require(n >= 2, "weights_er: n must be at least 2");
    require(p > 0.0 && p < 1.0, "weights_er: p must lie in (0,1)");
    std::vector<double> w(static_cast<std::size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 0.0;
    return WeightModel(n, p, 1.0, std::move(w));
}

WeightModel weights_exp_kernel(int n, double alpha, double kappa) {
    require(n >= 2, "weights_exp_kernel: n must be at least 2");
    require(alpha > 0.0 && alpha < 1.0, "weights_exp_kernel: alpha must lie in (0,1)");
    require(kappa >= 0.0, "weights_exp_kernel: kappa must be non-negative");
    const double p = std::pow(static_cast<double>(n), -alpha);
    // Node labels are 1-based in the kernel exponent.
    std::vector<double> factor(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) factor[i] = std::exp(-kappa * (i + 1) / n);
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) w[static_cast<std::size_t>(i) * n + j] = factor[i] * factor[j];
        }
    }
    return WeightModel(n, p, std::exp(-2.0 * kappa), std::move(w));
}

WeightModel weights_from_matrix(double p, const std::vector<std::vector<double>>& matrix, double beta) {
    const int n = static_cast<int>(matrix.size());
    require(n >= 2, "weights_from_matrix: matrix must be at least 2x2");
    require(p > 0.0 && p < 1.0, "weights_from_matrix: p must lie in (0,1)");
    require(beta > 0.0 && beta <= 1.0, "weights_from_matrix: beta must lie in (0,1]");
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(matrix[i].size()) == n, "weights_from_matrix: matrix must be square");
        for (int j = 0; j < n; ++j) {
            const double v = matrix[i][j];
            if (i == j) {
                require(v == 0.0, "weights_from_matrix: diagonal must be zero");
            } else {
                require(v == matrix[j][i], "weights_from_matrix: matrix must be symmetric");
                require(v >= beta && v <= 1.0, "weights_from_matrix: off-diagonal entries must lie in [beta,1]");
            }
            w[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    return WeightModel(n, p, beta, std::move(w));
}

SampledGraph::SampledGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SampledGraph: n must be positive");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

SampledGraph SampledGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SampledGraph g(n);
    for (const auto& [u, v] : edges) g.set_edge(u, v, true);
    return g;
}

void SampledGraph::set_edge(int i, int j, bool present) {
    if (i == j) throw std::invalid_argument("SampledGraph: self-loops are not allowed");
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("SampledGraph: node index out of range");
    adj_[static_cast<std::size_t>(i) * n_ + j] = present ? 1 : 0;
    adj_[static_cast<std::size_t>(j) * n_ + i] = present ? 1 : 0;
}

std::size_t SampledGraph::edge_count() const {
    std::size_t count = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            count += adj_[static_cast<std::size_t>(i) * n_ + j];
        }
    }
    return count;
}

SampledGraph sample_graph(const WeightModel& model, const GraphSeed& seed) {
    const int n = model.n();
    SampledGraph g(n);
    const double p = model.p();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t pair_index = static_cast<std::uint64_t>(i) * n + j;
            const double u = counter_uniform01(seed.master_seed, seed.replicate_index, pair_index);
            if (u < p * model.weight(i, j)) g.set_edge(i, j, true);
        }
    }
    return g;
}

std::vector<int> degrees(const SampledGraph& graph) {
    const int n = graph.n();
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int sum = 0;
        for (int j = 0; j < n; ++j) {
            if (j != i && graph.edge(i, j)) ++sum;
        }
        d[i] = sum;
    }
    return d;
}

int local_degree(const SampledGraph& graph, int i, int j) {
    if (i == j) throw std::invalid_argument("local_degree: i and j must differ");
    int count = 1;
    for (int l = 0; l < graph.n(); ++l) {
        if (l != i && l != j && graph.edge(i, l)) ++count;
    }
    return count;
}

} // namespace topix
