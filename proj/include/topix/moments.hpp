#pragma once

#include <vector>

#include "topix/graph_model.hpp"
#include "topix/index_family.hpp"

// Theoretical first and second moments of the index under a weight model:
// local mean degrees, linearization coefficients a_ij, the pair-sum variance
//   sigma^2 = sum_{i<j} (a_ij + a_ji)^2 p w_ij (1 - p w_ij),
// the leading expectation factor sum_{i<j} p w_ij f(w_i(j), w_j(i)), and the
// fourth-moment diagnostic ratio used to judge the linearization regime.

namespace topix {

struct TheoreticalMoments {
    int n = 0;
    double sigma_sq = 0.0;
    double expectation_approx = 0.0;
    double c1_ratio = 0.0;
    std::vector<double> a; // dense n*n, zero diagonal; not symmetric in general
    double coefficient(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Expected local degree w_i(j) = 1 + sum_{l not in {i,j}} p w_il by direct
// summation. Requires i != j.
double local_mean_degree(const WeightModel& model, int i, int j);

// a_ij = f(w_i(j), w_j(i))/2
//      + (1/2) sum_{l not in {i,j}} p w_il [fx(w_i(l), w_l(i)) + fy(w_i(l), w_l(i))].
// Requires i != j.
double coefficient_a(const WeightModel& model, const IndexFamily& family, int i, int j);

// Fills the full moment set in one pass. O(n^2) using cached row sums.
TheoreticalMoments theoretical_moments(const WeightModel& model, const IndexFamily& family);

// Same contract, O(n^3) with an explicit inner sum per pair; kept as the
// cross-check for the cached-row-sum path.
TheoreticalMoments theoretical_moments_reference(const WeightModel& model, const IndexFamily& family);

// Leading expectation factor of the index (without the O(1/np) correction).
double expectation_approx(const WeightModel& model, const IndexFamily& family);

// Fourth-moment diagnostic sum_{i<j} (a_ij + a_ji)^4 p / sigma^4, recomputed
// from the stored matrix; its decay over an n-grid signals the linearization
// regime. Serialized as c1_ratio in reports.
double fourth_moment_ratio(const TheoreticalMoments& moments, const WeightModel& model);

// c(kappa) = (1 - exp(-kappa))/kappa, continuous at 0 with c(0) = 1.
double c_kappa(double kappa);

enum class RandicBranch { critical, regular };

struct RandicVariance {
    double tau = 0.0;
    RandicBranch branch = RandicBranch::regular;
    double sigma_sq = 0.0;
};

// Closed-form variance of the general Randic index on the homogeneous model:
//   critical (|tau + 1/2| < 1e-12):
//     n(n-1)(n-2) p^2 (1-p)^2 / (32 (1+(n-2)p)^4)
//   regular:
//     ((1+2 tau)^2 / 2) n(n-1) p (1+(n-2)p)^(4 tau)   [leading term only]
RandicVariance er_randic_sigma_sq(int n, double p, double tau);

// Exact homogeneous-model expectations (polynomials in p).
double er_hyper_zagreb_expectation_exact(int n, double p);
double er_forgotten_expectation_exact(int n, double p);

// Leading-order inverse-sum-indeg expectation n(n-1)(n-2) p^2 / 4.
double er_isi_expectation_approx(int n, double p);

} // namespace topix
