#include "topix/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace topix {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

SampledGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_edge_list: cannot open '" + path + "'");
    std::vector<std::pair<long, long>> edges;
    long max_label = 0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ss(line);
        long u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v)) {
            throw std::runtime_error("load_edge_list: cannot parse line " + std::to_string(line_no) +
                                     " of '" + path + "'");
        }
        if (ss >> extra) {
            throw std::runtime_error("load_edge_list: trailing tokens on line " + std::to_string(line_no) +
                                     " of '" + path + "'");
        }
        if (u < 1 || v < 1) {
            throw std::runtime_error("load_edge_list: node labels must be >= 1 (line " +
                                     std::to_string(line_no) + ")");
        }
        if (u == v) {
            throw std::runtime_error("load_edge_list: self-loop on line " + std::to_string(line_no));
        }
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    if (edges.empty()) throw std::runtime_error("load_edge_list: no edges in '" + path + "'");
    SampledGraph g(static_cast<int>(max_label));
    for (const auto& [u, v] : edges) {
        g.set_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1, true);
    }
    return g;
}

std::vector<std::vector<double>> load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_matrix: cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::vector<double> row;
        double v = 0.0;
        while (ss >> v) row.push_back(v);
        if (!ss.eof()) {
            throw std::runtime_error("load_matrix: non-numeric token on line " + std::to_string(line_no) +
                                     " of '" + path + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("load_matrix: no rows in '" + path + "'");
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) throw std::runtime_error("load_matrix: matrix in '" + path + "' is not square");
    }
    return rows;
}

} // namespace topix
