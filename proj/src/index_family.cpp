#include "topix/index_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topix/kahan.hpp"

namespace topix {

namespace {

void require_positive(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::invalid_argument("index family: arguments must be positive");
    }
}

} // namespace

IndexFamily general_randic(double tau) {
    if (tau == 0.0) throw std::invalid_argument("general_randic: tau must be non-zero");
    IndexFamily fam;
    fam.name = "general-randic";
    fam.parameter = tau;
    fam.f = [tau](double x, double y) { return std::pow(x * y, tau); };
    fam.fx = [tau](double x, double y) { return tau * std::pow(x, tau - 1.0) * std::pow(y, tau); };
    fam.fy = [tau](double x, double y) { return tau * std::pow(x, tau) * std::pow(y, tau - 1.0); };
    return fam;
}

IndexFamily randic() {
    IndexFamily fam = general_randic(-0.5);
    fam.name = "randic";
    return fam;
}

IndexFamily hyper_zagreb() {
    IndexFamily fam;
    fam.name = "hyper-zagreb";
    fam.f = [](double x, double y) { double s = x + y; return s * s; };
    fam.fx = [](double x, double y) { return 2.0 * (x + y); };
    fam.fy = [](double x, double y) { return 2.0 * (x + y); };
    return fam;
}

IndexFamily forgotten() {
    IndexFamily fam;
    fam.name = "forgotten";
    fam.f = [](double x, double y) { return x * x + y * y; };
    fam.fx = [](double x, double) { return 2.0 * x; };
    fam.fy = [](double, double y) { return 2.0 * y; };
    return fam;
}

IndexFamily inverse_sum_indeg() {
    IndexFamily fam;
    fam.name = "isi";
    fam.f = [](double x, double y) { return x * y / (x + y); };
    fam.fx = [](double x, double y) { double s = x + y; return y * y / (s * s); };
    fam.fy = [](double x, double y) { double s = x + y; return x * x / (s * s); };
    return fam;
}

IndexFamily harmonic() {
    IndexFamily fam;
    fam.name = "harmonic";
    fam.f = [](double x, double y) { return 2.0 / (x + y); };
    fam.fx = [](double x, double y) { double s = x + y; return -2.0 / (s * s); };
    fam.fy = [](double x, double y) { double s = x + y; return -2.0 / (s * s); };
    return fam;
}

IndexFamily family_from_spec(const std::string& spec) {
    if (spec == "randic") return randic();
    if (spec == "hyper-zagreb") return hyper_zagreb();
    if (spec == "forgotten") return forgotten();
    if (spec == "isi") return inverse_sum_indeg();
    if (spec == "harmonic") return harmonic();
    const std::string prefix = "general-randic:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string arg = spec.substr(prefix.size());
        std::size_t used = 0;
        double tau = 0.0;
        try {
            tau = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec: cannot parse tau in '" + spec + "'");
        }
        if (used != arg.size()) throw std::invalid_argument("family spec: trailing characters in '" + spec + "'");
        return general_randic(tau);
    }
    throw std::invalid_argument("family spec: unknown family '" + spec + "'");
}

double evaluate(const IndexFamily& family, double x, double y) {
    require_positive(x, y);
    return family.f(x, y);
}

double partial_x(const IndexFamily& family, double x, double y) {
    require_positive(x, y);
    return family.fx(x, y);
}

double partial_y(const IndexFamily& family, double x, double y) {
    require_positive(x, y);
    return family.fy(x, y);
}

PartialsCheck check_partials_fd(const IndexFamily& family, const std::vector<std::pair<double, double>>& grid) {
    PartialsCheck report;
    for (const auto& [x, y] : grid) {
        require_positive(x, y);
        const auto relative = [](double got, double want) {
            return std::abs(got - want) / std::max(std::abs(want), 1e-12);
        };
        const double hx = std::max(1e-5 * x, 1e-7);
        const double fdx = (family.f(x + hx, y) - family.f(x - hx, y)) / (2.0 * hx);
        report.max_relative_error = std::max(report.max_relative_error, relative(fdx, family.fx(x, y)));
        const double hy = std::max(1e-5 * y, 1e-7);
        const double fdy = (family.f(x, y + hy) - family.f(x, y - hy)) / (2.0 * hy);
        report.max_relative_error = std::max(report.max_relative_error, relative(fdy, family.fy(x, y)));
    }
    report.pass = report.max_relative_error < 1e-4;
    return report;
}

double compute_index(const SampledGraph& graph, const IndexFamily& family) {
    const std::vector<int> deg = degrees(graph);
    KahanSum sum;
    const int n = graph.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (graph.edge(i, j)) {
                sum.add(family.f(static_cast<double>(deg[i]), static_cast<double>(deg[j])));
            }
        }
    }
    return sum.value();
}

} // namespace topix
