#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cpfabc {

/// Quantile of a sample by linear interpolation between order statistics
/// (the "type 7" rule: index h = (n-1)p on the sorted values). This is the
/// single quantile definition used for summary statistics and reported
/// posterior quantiles.
double quantile_type7(std::span<const double> values, double p);

/// Same on pre-sorted values (ascending); no copy, no checks beyond size.
double quantile_type7_sorted(std::span<const double> sorted, double p);

double median(std::span<const double> values);

/// Unnormalized median absolute deviation: median(|x - median(x)|).
double mad(std::span<const double> values);

/// Lowest order statistic whose index is ceil(n*p) (the exact minimizer of
/// the pinball loss at level p). p in (0,1).
double quantile_lower(std::span<const double> values, double p);

/// Weighted empirical quantile: smallest x whose cumulative normalized
/// weight reaches p. Weights must be non-negative with a positive sum.
double weighted_quantile(std::span<const double> values, std::span<const double> weights, double p);

double weighted_mean(std::span<const double> values, std::span<const double> weights);

/// Kolmogorov-Smirnov statistic between a weighted sample and an unweighted
/// one (sup |F1 - F2| over the pooled support).
double weighted_ks_distance(std::vector<double> sample_a, std::vector<double> weights_a,
                            std::vector<double> sample_b);

/// One-sample KS p-value via the asymptotic Kolmogorov distribution.
double ks_pvalue(double d_statistic, std::size_t n);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);

}  // namespace cpfabc
