#pragma once

#include <string>
#include <vector>

#include "topix/graph_model.hpp"

namespace topix {

// Reads "u v" lines with 1-based node labels. Blank lines and lines starting
// with '#' are ignored, duplicate edges collapse, self-loops are rejected.
// The node count is the largest label seen.
SampledGraph load_edge_list(const std::string& path);

// Whitespace-separated square matrix of reals, one row per line; '#' comment
// lines allowed. Used for user-supplied weight matrices.
std::vector<std::vector<double>> load_matrix(const std::string& path);

} // namespace topix
