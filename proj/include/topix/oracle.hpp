#pragma once

#include <cstdint>
#include <vector>

#include "topix/graph_model.hpp"
#include "topix/index_family.hpp"

// Independent ground truth for tiny models: exact index moments by total
// enumeration, the Poisson-Binomial law of the reduced local degree, and its
// binomial envelope.

namespace topix {

struct ExactMoments {
    double expectation = 0.0;
    double variance = 0.0;
    int n = 0;
    std::uint64_t graph_count = 0;    // 2^(n(n-1)/2)
    double total_probability = 0.0;   // should be 1 up to rounding
};

// Exact E and Var of the index by enumerating all 2^(n(n-1)/2) adjacency
// assignments, weighted by prod p w_ij^A_ij (1 - p w_ij)^(1-A_ij).
// Graph codes map bit k to the k-th upper-triangular pair in row-major order
// (0,1),(0,2),...,(0,n-1),(1,2),.... Requires n <= 5 (at most 1024 graphs).
ExactMoments enumerate_exact_moments(const WeightModel& model, const IndexFamily& family);

struct PBDistribution {
    std::vector<double> probs;
    std::vector<double> pmf; // length probs.size() + 1
};

// Poisson-Binomial pmf by iterative convolution:
// pmf'(k) = pmf(k)(1-q) + pmf(k-1) q for each success probability q.
PBDistribution pb_pmf(const std::vector<double>& probs);

// Envelope C(n-2,k) p^k (1 - p beta)^(n-2-k), evaluated in log space.
double pb_binomial_bound(int n, double p, double beta, int k);

struct EnvelopeReport {
    bool holds = false;
    std::vector<double> margins; // bound(k) - pmf(k) for k = 0..n-2
};

// Checks that the pmf of the reduced local degree d_i(j) - 1, i.e. the
// Poisson-Binomial law of {p w_il : l outside {i,j}}, sits below the binomial
// envelope at every k. For constant weights with beta = 1 the two coincide.
EnvelopeReport check_local_degree_envelope(const WeightModel& model, int i, int j);

} // namespace topix
