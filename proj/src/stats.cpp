#include "topix/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "topix/kahan.hpp"

namespace topix {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Acklam's rational approximation to the probit function.
double quantile_estimate(double u) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                               1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                               6.680131188771972e+01,  -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                               -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                               3.754408661907416e+00};
    const double plow = 0.02425;
    if (u < plow) {
        const double q = std::sqrt(-2.0 * std::log(u));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (u > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = u - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("normal_quantile: u must lie in (0,1)");
    double x = quantile_estimate(u);
    // One Halley refinement step against the high-precision CDF.
    const double e = normal_cdf(x) - u;
    const double t = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x -= t / (1.0 + 0.5 * x * t);
    return x;
}

double ks_statistic(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double r = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const double cdf = normal_cdf(sorted[k]);
        d = std::max(d, std::abs((k + 1) / r - cdf));
        d = std::max(d, std::abs(k / r - cdf));
    }
    return d;
}

std::vector<double> standardize(std::span<const double> samples, double center, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("standardize: sigma must be positive");
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = (samples[i] - center) / sigma;
    return out;
}

double sample_mean(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("sample_mean: empty sample");
    KahanSum sum;
    for (double v : samples) sum.add(v);
    return sum.value() / static_cast<double>(samples.size());
}

double sample_variance(std::span<const double> samples) {
    if (samples.size() < 2) throw std::invalid_argument("sample_variance: need at least two samples");
    const double mean = sample_mean(samples);
    KahanSum sum;
    for (double v : samples) sum.add((v - mean) * (v - mean));
    return sum.value() / static_cast<double>(samples.size() - 1);
}

SummaryMoments summary_moments(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("summary_moments: empty sample");
    SummaryMoments out;
    out.mean = sample_mean(samples);
    if (samples.size() < 2) {
        out.variance = kNan;
        out.skewness = kNan;
        out.excess_kurtosis = kNan;
        return out;
    }
    const double r = static_cast<double>(samples.size());
    KahanSum s2, s3, s4;
    for (double v : samples) {
        const double d = v - out.mean;
        s2.add(d * d);
        s3.add(d * d * d);
        s4.add(d * d * d * d);
    }
    const double m2 = s2.value() / r;
    const double m3 = s3.value() / r;
    const double m4 = s4.value() / r;
    out.variance = s2.value() / (r - 1.0);
    if (m2 > 0.0) {
        out.skewness = m3 / std::pow(m2, 1.5);
        out.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    } else {
        out.skewness = kNan;
        out.excess_kurtosis = kNan;
    }
    return out;
}

LogLogFit fit_log_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_log_slope: size mismatch");
    if (xs.size() < 2) throw std::invalid_argument("fit_log_slope: need at least two points");
    std::vector<double> lx(xs.size()), ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw std::invalid_argument("fit_log_slope: inputs must be positive");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    const double mx = sample_mean(lx);
    const double my = sample_mean(ly);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    LogLogFit fit;
    fit.slope = sxx == 0.0 ? 0.0 : sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("pearson_correlation: bad input");
    const double mx = sample_mean(xs);
    const double my = sample_mean(ys);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("pearson_correlation: constant input");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace topix
