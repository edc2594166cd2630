#pragma once

#include <span>
#include <vector>

namespace topix {

// Standard normal CDF, absolute error well below 1e-7.
double normal_cdf(double x);

// Inverse of normal_cdf on (0,1); rational initial guess refined by one
// Halley step, accurate to ~1e-13.
double normal_quantile(double u);

// One-sample Kolmogorov-Smirnov distance against the standard normal:
// D = max_k max(|k/R - Phi(x_(k))|, |(k-1)/R - Phi(x_(k))|).
double ks_statistic(std::span<const double> samples);

// Elementwise (x - center) / sigma; sigma must be positive.
std::vector<double> standardize(std::span<const double> samples, double center, double sigma);

struct SummaryMoments {
    double mean = 0.0;
    double variance = 0.0;        // 1/(R-1) normalization; NaN when R < 2
    double skewness = 0.0;        // m3 / m2^(3/2); NaN for constant samples
    double excess_kurtosis = 0.0; // m4 / m2^2 - 3;  NaN for constant samples
};

// Central moments m_k use the 1/R normalization. Skewness and kurtosis are
// NaN when undefined (fewer than two samples or zero variance).
SummaryMoments summary_moments(std::span<const double> samples);

double sample_mean(std::span<const double> samples);
double sample_variance(std::span<const double> samples);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares on (ln x, ln y); all inputs must be positive and at
// least two points are required.
LogLogFit fit_log_slope(std::span<const double> xs, std::span<const double> ys);

double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

} // namespace topix
