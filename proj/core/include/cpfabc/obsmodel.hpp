#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "cpfabc/cpf.hpp"
#include "cpfabc/rng.hpp"

namespace cpfabc {

/// Observation-process parameters: period effects and noise variance.
/// beta[0] is the baseline; beta[k-1] for period k >= 2 is the offset added
/// on top of the baseline.
struct ObsParams {
  std::vector<double> beta;
  double sigma2 = 0.0;

  void validate() const;
};

/// The full parameter vector psi = (theta, omega), flattened in the fixed
/// order tau0, f0, a, b, beta_1..beta_K, sigma2.
struct ParamVector {
  CpfParams theta;
  ObsParams omega;

  std::size_t dimension() const { return 4 + omega.beta.size() + 1; }
  std::vector<double> flatten() const;
  static ParamVector unflatten(const std::vector<double>& values, int n_periods);
  static std::vector<std::string> names(int n_periods);
  bool all_positive_support() const;
};

struct SurveySite {
  int site_id = 0;
  int landscape = 0;
  int habitat = 0;                  // land-use category of the transect
  std::vector<std::size_t> patches; // raster cells covered by the transect
  double exposure = 0.0;            // duration x area, minutes * m^2
};

struct SurveyDesign {
  int n_years = 0;
  int n_periods = 0;
  std::vector<SurveySite> sites;

  void validate() const;
  std::size_t record_count() const { return sites.size() * n_years * n_periods; }
};

struct CountRecord {
  int site = 0;
  int year = 0;    // 1-based
  int period = 0;  // 1-based
  std::int64_t count = 0;
};

struct Dataset {
  std::vector<CountRecord> records;
};

/// Prior of Eq.-style form: truncated lognormal tau0, lognormal f0, uniform
/// a and b, normal betas, inverse-gamma sigma2. Values here are the
/// defaults; they can be overridden from the run configuration.
struct PriorSpec {
  int n_periods = 3;
  double tau0_logmean = std::log(1000.0);
  double tau0_logsd = 1.0;
  double tau0_lo = 0.0;
  double tau0_hi = 1000.0;
  double f0_logmean = std::log(0.1);
  double f0_logsd = 1.0;
  double a_lo = 100.0, a_hi = 1000.0;
  double b_lo = 100.0, b_hi = 1000.0;
  double beta_mean = 0.0;
  double beta_sd = 10.0;  // normal(0, 100) variance read as sd = 10
  double invgamma_shape = 1.0;
  double invgamma_scale = 1.0;

  std::size_t dimension() const { return 4 + static_cast<std::size_t>(n_periods) + 1; }
  std::vector<std::string> names() const { return ParamVector::names(n_periods); }

  ParamVector sample(Rng& rng) const;
  /// Marginal CDF of flattened parameter `index` at x (for KS checks).
  double cdf(std::size_t index, double x) const;
};

ParamVector sample_prior(const PriorSpec& prior, std::uint64_t seed);

/// Mean visitation intensity over a site's transect patches for the year
/// and period at hand. Implementations cache fields per (landscape, year,
/// period) for one theta.
using SiteIntensityFn =
    std::function<double(const SurveySite& site, int year, int period)>;

/// Simulates counts for the whole design. Each (site, year, period) record
/// uses its own derived random stream, so the design order never changes
/// outcomes. nu = 0 short-circuits to a zero count.
Dataset simulate_dataset(const ParamVector& psi, const SurveyDesign& design,
                         const SiteIntensityFn& site_intensity, std::uint64_t seed);

/// Log-likelihood of one count under the Poisson-lognormal observation
/// model, by adaptive quadrature on the log-intensity scale. Test oracle:
/// the calibration pipeline never calls this.
double loglik_oracle(std::int64_t y, double exposure, double nu, double beta_eff,
                     double sigma2);

/// Dataset CSV: header "site,year,period,habitat,count".
void save_dataset_csv(const Dataset& data, const SurveyDesign& design,
                      const std::filesystem::path& path);
Dataset load_dataset_csv(const std::filesystem::path& path, const SurveyDesign& design);

}  // namespace cpfabc
