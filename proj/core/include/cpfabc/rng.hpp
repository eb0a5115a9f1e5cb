#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cpfabc {

/// Mixes a value into a well-distributed 64-bit hash (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

/// Combines a seed with a stream tag into a new seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// FNV-1a over raw bytes, used for content hashes and row checksums.
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull);
std::uint64_t fnv1a64_str(const std::string& s);

/// Deterministic random generator (xoshiro256++) with the sampling routines
/// the project needs. All distributions are implemented on top of the raw
/// 64-bit stream so that results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream derived from this generator's original seed and a
  /// stream tag; unaffected by how much has been drawn from *this.
  Rng fork(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  /// Uniform on (0, 1); never returns an exact endpoint.
  double uniform_open();
  double uniform(double lo, double hi);

  /// Unbiased integer on [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via the inverse CDF.
  double normal();
  double normal(double mean, double sd);
  double lognormal(double mu, double sigma);
  /// Lognormal(mu, sigma) conditioned on [lo, hi], by rejection.
  double truncated_lognormal(double mu, double sigma, double lo, double hi);
  double exponential();

  /// Marsaglia-Tsang gamma with given shape and unit scale.
  double gamma(double shape);
  double beta(double alpha, double beta);

  /// Poisson count. Exact (inversion) for small means, transformed rejection
  /// for moderate means, normal approximation above 1e9. Saturates at a large
  /// finite count instead of overflowing for astronomically large means.
  std::int64_t poisson(double mean);

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

/// Quantile function of the standard normal (Wichura's AS 241, full double
/// precision). p must be in (0, 1).
double inverse_normal_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace cpfabc
