#include "cpfabc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cpfabc/errors.hpp"

namespace cpfabc {

double quantile_type7_sorted(std::span<const double> sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 0) throw InputError("quantile: empty sample");
  if (n == 1) return sorted[0];
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double h = static_cast<double>(n - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 >= n) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double quantile_type7(std::span<const double> values, double p) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return quantile_type7_sorted(sorted, p);
}

double median(std::span<const double> values) { return quantile_type7(values, 0.5); }

double mad(std::span<const double> values) {
  const double m = median(values);
  std::vector<double> dev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) dev[i] = std::fabs(values[i] - m);
  return median(dev);
}

double quantile_lower(std::span<const double> values, double p) {
  const std::size_t n = values.size();
  if (n == 0) throw InputError("quantile_lower: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double idx = std::ceil(static_cast<double>(n) * p);
  if (idx < 1.0) idx = 1.0;
  if (idx > static_cast<double>(n)) idx = static_cast<double>(n);
  return sorted[static_cast<std::size_t>(idx) - 1];
}

double weighted_quantile(std::span<const double> values, std::span<const double> weights, double p) {
  const std::size_t n = values.size();
  if (n == 0 || weights.size() != n) throw InputError("weighted_quantile: bad input sizes");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw InputError("weighted_quantile: weights sum to zero");
  const double target = p * total;
  double cum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cum += weights[order[k]];
    if (cum >= target) return values[order[k]];
  }
  return values[order[n - 1]];
}

double weighted_mean(std::span<const double> values, std::span<const double> weights) {
  double sw = 0.0, swx = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sw += weights[i];
    swx += weights[i] * values[i];
  }
  if (!(sw > 0.0)) throw InputError("weighted_mean: weights sum to zero");
  return swx / sw;
}

double weighted_ks_distance(std::vector<double> sample_a, std::vector<double> weights_a,
                            std::vector<double> sample_b) {
  if (sample_a.empty() || sample_b.empty()) throw InputError("ks: empty sample");
  std::vector<std::size_t> order(sample_a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sample_a[x] < sample_a[y]; });
  std::sort(sample_b.begin(), sample_b.end());
  double total = 0.0;
  for (double w : weights_a) total += w;

  double d = 0.0;
  double cum = 0.0;
  std::size_t ib = 0;
  const std::size_t nb = sample_b.size();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double x = sample_a[order[k]];
    cum += weights_a[order[k]];
    // Absorb ties in a.
    while (k + 1 < order.size() && sample_a[order[k + 1]] == x) {
      ++k;
      cum += weights_a[order[k]];
    }
    while (ib < nb && sample_b[ib] <= x) ++ib;
    const double fa = cum / total;
    const double fb = static_cast<double>(ib) / static_cast<double>(nb);
    d = std::max(d, std::fabs(fa - fb));
  }
  // Also sweep b's jump points against a.
  cum = 0.0;
  std::size_t ia = 0;
  for (std::size_t k = 0; k < nb; ++k) {
    const double x = sample_b[k];
    while (ia < order.size() && sample_a[order[ia]] <= x) cum += weights_a[order[ia++]];
    const double fa = cum / total;
    const double fb = static_cast<double>(k + 1) / static_cast<double>(nb);
    d = std::max(d, std::fabs(fa - fb));
  }
  return d;
}

double ks_pvalue(double d_statistic, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d_statistic;
  if (lambda < 1e-8) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw InputError("gamma_p: invalid arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return 1.0 - gamma_p(0.5 * df, 0.5 * x);
}

}  // namespace cpfabc
