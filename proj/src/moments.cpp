#include "topix/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "topix/kahan.hpp"

namespace topix {

namespace {

// Row sums r_i = sum_{l != i} p w_il, so that w_i(j) = 1 + r_i - p w_ij.
std::vector<double> prob_row_sums(const WeightModel& model) {
    const int n = model.n();
    std::vector<double> rows(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        KahanSum sum;
        for (int l = 0; l < n; ++l) {
            if (l != i) sum.add(model.edge_probability(i, l));
        }
        rows[i] = sum.value();
    }
    return rows;
}

struct MomentAccumulator {
    KahanSum sigma_sq;
    KahanSum expectation;
    KahanSum c1_numerator;
};

TheoreticalMoments finalize(const WeightModel& model, const IndexFamily& family,
                            std::vector<double> a, const std::vector<double>& rows) {
    const int n = model.n();
    const double p = model.p();
    MomentAccumulator acc;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pw = model.edge_probability(i, j);
            const double pair = a[static_cast<std::size_t>(i) * n + j] + a[static_cast<std::size_t>(j) * n + i];
            acc.sigma_sq.add(pair * pair * pw * (1.0 - pw));
            acc.c1_numerator.add(pair * pair * pair * pair * p);
            const double wij = 1.0 + rows[i] - pw;
            const double wji = 1.0 + rows[j] - pw;
            acc.expectation.add(pw * family.f(wij, wji));
        }
    }
    TheoreticalMoments m;
    m.n = n;
    m.a = std::move(a);
    m.sigma_sq = acc.sigma_sq.value();
    m.expectation_approx = acc.expectation.value();
    const double s2 = m.sigma_sq;
    m.c1_ratio = acc.c1_numerator.value() / (s2 * s2);
    return m;
}

} // namespace

double local_mean_degree(const WeightModel& model, int i, int j) {
    if (i == j) throw std::invalid_argument("local_mean_degree: i and j must differ");
    KahanSum sum;
    sum.add(1.0);
    for (int l = 0; l < model.n(); ++l) {
        if (l != i && l != j) sum.add(model.edge_probability(i, l));
    }
    return sum.value();
}

double coefficient_a(const WeightModel& model, const IndexFamily& family, int i, int j) {
    if (i == j) throw std::invalid_argument("coefficient_a: i and j must differ");
    KahanSum sum;
    sum.add(0.5 * family.f(local_mean_degree(model, i, j), local_mean_degree(model, j, i)));
    for (int l = 0; l < model.n(); ++l) {
        if (l == i || l == j) continue;
        const double wil = local_mean_degree(model, i, l);
        const double wli = local_mean_degree(model, l, i);
        sum.add(0.5 * model.edge_probability(i, l) * (family.fx(wil, wli) + family.fy(wil, wli)));
    }
    return sum.value();
}

TheoreticalMoments theoretical_moments(const WeightModel& model, const IndexFamily& family) {
    const int n = model.n();
    const std::vector<double> rows = prob_row_sums(model);
    // First pass: s_i = sum_{l != i} p w_il [fx + fy](w_i(l), w_l(i)).
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        KahanSum sum;
        for (int l = 0; l < n; ++l) {
            if (l == i) continue;
            const double pw = model.edge_probability(i, l);
            const double wil = 1.0 + rows[i] - pw;
            const double wli = 1.0 + rows[l] - pw;
            sum.add(pw * (family.fx(wil, wli) + family.fy(wil, wli)));
        }
        s[i] = sum.value();
    }
    // Second pass: the l-sum in a_ij is s_i minus the excluded l = j term.
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double pw = model.edge_probability(i, j);
            const double wij = 1.0 + rows[i] - pw;
            const double wji = 1.0 + rows[j] - pw;
            const double g = family.fx(wij, wji) + family.fy(wij, wji);
            a[static_cast<std::size_t>(i) * n + j] = 0.5 * family.f(wij, wji) + 0.5 * (s[i] - pw * g);
        }
    }
    return finalize(model, family, std::move(a), rows);
}

TheoreticalMoments theoretical_moments_reference(const WeightModel& model, const IndexFamily& family) {
    const int n = model.n();
    const std::vector<double> rows = prob_row_sums(model);
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double pwij = model.edge_probability(i, j);
            KahanSum sum;
            sum.add(0.5 * family.f(1.0 + rows[i] - pwij, 1.0 + rows[j] - pwij));
            for (int l = 0; l < n; ++l) {
                if (l == i || l == j) continue;
                const double pw = model.edge_probability(i, l);
                const double wil = 1.0 + rows[i] - pw;
                const double wli = 1.0 + rows[l] - pw;
                sum.add(0.5 * pw * (family.fx(wil, wli) + family.fy(wil, wli)));
            }
            a[static_cast<std::size_t>(i) * n + j] = sum.value();
        }
    }
    return finalize(model, family, std::move(a), rows);
}

double expectation_approx(const WeightModel& model, const IndexFamily& family) {
    const int n = model.n();
    const std::vector<double> rows = prob_row_sums(model);
    KahanSum sum;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pw = model.edge_probability(i, j);
            sum.add(pw * family.f(1.0 + rows[i] - pw, 1.0 + rows[j] - pw));
        }
    }
    return sum.value();
}

double fourth_moment_ratio(const TheoreticalMoments& moments, const WeightModel& model) {
    if (!(moments.sigma_sq > 0.0)) throw std::invalid_argument("fourth_moment_ratio: sigma_sq must be positive");
    const int n = moments.n;
    const double p = model.p();
    KahanSum numerator;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pair = moments.coefficient(i, j) + moments.coefficient(j, i);
            numerator.add(pair * pair * pair * pair * p);
        }
    }
    return numerator.value() / (moments.sigma_sq * moments.sigma_sq);
}

double c_kappa(double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("c_kappa: kappa must be non-negative");
    if (kappa < 1e-6) {
        // series with error below kappa^4/120
        return 1.0 - kappa / 2.0 + kappa * kappa / 6.0 - kappa * kappa * kappa / 24.0;
    }
    return (1.0 - std::exp(-kappa)) / kappa;
}

RandicVariance er_randic_sigma_sq(int n, double p, double tau) {
    if (n < 3) throw std::invalid_argument("er_randic_sigma_sq: n must be at least 3");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("er_randic_sigma_sq: p must lie in (0,1)");
    if (tau == 0.0) throw std::invalid_argument("er_randic_sigma_sq: tau must be non-zero");
    RandicVariance out;
    out.tau = tau;
    const double w = 1.0 + (n - 2) * p;
    const double nd = static_cast<double>(n);
    if (std::abs(tau + 0.5) < 1e-12) {
        out.branch = RandicBranch::critical;
        out.sigma_sq = nd * (nd - 1.0) * (nd - 2.0) * p * p * (1.0 - p) * (1.0 - p) / (32.0 * w * w * w * w);
    } else {
        out.branch = RandicBranch::regular;
        const double c = 1.0 + 2.0 * tau;
        out.sigma_sq = c * c / 2.0 * nd * (nd - 1.0) * p * std::pow(w, 4.0 * tau);
    }
    return out;
}

double er_hyper_zagreb_expectation_exact(int n, double p) {
    if (n < 2) throw std::invalid_argument("er_hyper_zagreb_expectation_exact: n must be at least 2");
    const double nd = static_cast<double>(n);
    return nd * (nd - 1.0) * (nd - 2.0) * (2.0 * nd - 5.0) * p * p * p
         + 5.0 * nd * (nd - 1.0) * (nd - 2.0) * p * p
         + 2.0 * nd * (nd - 1.0) * p;
}

double er_forgotten_expectation_exact(int n, double p) {
    if (n < 2) throw std::invalid_argument("er_forgotten_expectation_exact: n must be at least 2");
    const double nd = static_cast<double>(n);
    return nd * (nd - 1.0) * (nd - 2.0) * (nd - 3.0) * p * p * p
         + 3.0 * nd * (nd - 1.0) * (nd - 2.0) * p * p
         + nd * (nd - 1.0) * p;
}

double er_isi_expectation_approx(int n, double p) {
    if (n < 3) throw std::invalid_argument("er_isi_expectation_approx: n must be at least 3");
    const double nd = static_cast<double>(n);
    return nd * (nd - 1.0) * (nd - 2.0) * p * p / 4.0;
}

} // namespace topix
