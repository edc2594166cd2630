#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Heterogeneous random-graph model: independent edges with
// P(A_ij = 1) = p * w_ij, symmetric weights w_ij in [beta, 1], zero diagonal.

namespace topix {

class WeightModel {
public:
    int n() const { return n_; }
    double p() const { return p_; }
    double beta() const { return beta_; }

    double weight(int i, int j) const { return weights_[static_cast<std::size_t>(i) * n_ + j]; }
    double edge_probability(int i, int j) const { return p_ * weight(i, j); }

    // True when every off-diagonal weight is identical (the homogeneous case).
    bool constant_weights() const { return constant_weights_; }

    const std::vector<double>& weights() const { return weights_; }

private:
    WeightModel(int n, double p, double beta, std::vector<double> weights);

    int n_ = 0;
    double p_ = 0.0;
    double beta_ = 0.0;
    bool constant_weights_ = false;
    std::vector<double> weights_; // dense n*n, row-major

    friend WeightModel weights_er(int n, double p);
    friend WeightModel weights_exp_kernel(int n, double alpha, double kappa);
    friend WeightModel weights_from_matrix(double p, const std::vector<std::vector<double>>& matrix, double beta);
};

// Homogeneous model: all off-diagonal weights equal 1, the constant absorbed
// into p. Requires n >= 2 and p strictly inside (0,1).
WeightModel weights_er(int n, double p);

// p = n^(-alpha), w_ij = exp(-kappa*i/n) * exp(-kappa*j/n) with 1-based node
// labels, beta = exp(-2*kappa). kappa = 0 reduces exactly to weights_er.
WeightModel weights_exp_kernel(int n, double alpha, double kappa);

// User-supplied weights; the matrix must be symmetric with zero diagonal and
// off-diagonal entries in [beta, 1].
WeightModel weights_from_matrix(double p, const std::vector<std::vector<double>>& matrix, double beta);

class SampledGraph {
public:
    explicit SampledGraph(int n);
    static SampledGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void set_edge(int i, int j, bool present);
    std::size_t edge_count() const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// Identical (master_seed, replicate_index) always reproduces the same graph.
struct GraphSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;
};

// Draws each upper-triangular entry as an independent Bernoulli(p * w_ij)
// from the counter stream keyed by (seed, replicate, pair index i*n+j).
SampledGraph sample_graph(const WeightModel& model, const GraphSeed& seed);

std::vector<int> degrees(const SampledGraph& graph);

// d_{i(j)} = 1 + number of neighbours of i outside {i, j}. Satisfies
// d_{i(j)} = d_i + 1 - A_ij. Requires i != j.
int local_degree(const SampledGraph& graph, int i, int j);

} // namespace topix
