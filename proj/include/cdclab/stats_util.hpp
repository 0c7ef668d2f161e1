// Scalar statistics helpers shared by the survival and fitting code:
// normal distribution functions, quantiles, simple regression and summaries.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cdclab {

double normal_pdf(double x);
double normal_cdf(double x);
double normal_sf(double x);       // 1 - cdf, accurate in the right tail
double log_normal_sf(double x);   // log(normal_sf), safe for x up to ~1e8
double normal_quantile(double p); // inverse cdf, p in (0, 1)

// Two-sided p-value of a standard normal statistic; never returns 0
// (clamped at the smallest positive double).
double two_sided_p(double z);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double correlation = 0.0;
    std::size_t n = 0;
};

// Ordinary least squares of y on x with the Pearson correlation of the pair.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

double mean_of(std::span<const double> v);

// Kahan-Neumaier compensated sum; used where long sums feed tolerance checks.
double compensated_sum(std::span<const double> v);

// Nearest-rank quantile of an unsorted sample (q in [0, 1]); q = 0 gives the
// minimum, q = 1 the maximum.
double nearest_rank_quantile(std::vector<double> sample, double q);

}  // namespace cdclab
