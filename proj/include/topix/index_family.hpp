#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topix/graph_model.hpp"

// Degree-based topological indices: I = sum over edges of f(d_i, d_j) for a
// symmetric function f with analytic first partials.

namespace topix {

struct IndexFamily {
    std::string name;
    std::optional<double> parameter; // tau for the general Randic family
    std::function<double(double, double)> f;
    std::function<double(double, double)> fx;
    std::function<double(double, double)> fy;
};

// f = (xy)^tau; tau must be non-zero. tau = -1/2 is the classical Randic index.
IndexFamily general_randic(double tau);
IndexFamily randic();

IndexFamily hyper_zagreb();     // f = (x+y)^2
IndexFamily forgotten();        // f = x^2 + y^2
IndexFamily inverse_sum_indeg(); // f = xy/(x+y)
IndexFamily harmonic();         // f = 2/(x+y)

// CLI selector: "randic", "general-randic:<tau>", "hyper-zagreb",
// "forgotten", "isi", "harmonic".
IndexFamily family_from_spec(const std::string& spec);

// f(x,y); arguments must be positive (degrees in an index sum are >= 1).
double evaluate(const IndexFamily& family, double x, double y);
double partial_x(const IndexFamily& family, double x, double y);
double partial_y(const IndexFamily& family, double x, double y);

struct PartialsCheck {
    double max_relative_error = 0.0;
    bool pass = false;
};

// Central finite differences of f against the analytic partials on the given
// grid; pass threshold 1e-4 on the max relative deviation.
PartialsCheck check_partials_fd(const IndexFamily& family, const std::vector<std::pair<double, double>>& grid);

// Sum of f(d_i, d_j) over the unordered edges of the graph (compensated
// summation). Empty edge set yields 0.
double compute_index(const SampledGraph& graph, const IndexFamily& family);

} // namespace topix
