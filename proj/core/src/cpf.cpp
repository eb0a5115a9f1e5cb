#include "cpfabc/cpf.hpp"

#include <cassert>
#include <cmath>
#include <utility>
#include <vector>

#include "cpfabc/errors.hpp"
#include "cpfabc/parallel.hpp"

namespace cpfabc {

void CpfParams::validate() const {
  if (!(tau0 > 0.0)) throw InputError("CpfParams: tau0 must be positive");
  if (!(f0 > 0.0)) throw InputError("CpfParams: f0 must be positive");
  if (!(a > 0.0)) throw InputError("CpfParams: a must be positive");
  if (!(b > 0.0)) throw InputError("CpfParams: b must be positive");
}

double VisitationField::total_visitation() const {
  double total = 0.0;
  for (double v : nu.data()) total += v;
  return total;
}

double max_flight_distance(double f, const CpfParams& params) {
  assert(f >= params.f0 && "max_flight_distance requires f >= f0");
  return params.tau0 * (1.0 - params.f0 / f);
}

double nest_specific_distance(double s, const CpfParams& params) {
  return params.tau0 / (1.0 + std::exp((std::sqrt(s) - params.a) / params.b));
}

namespace {

/// Visits every cell whose centroid lies strictly within `radius` meters of
/// the nest cell, in row-major order (same term order as an all-pairs scan).
template <typename Fn>
inline void scan_disc(int width, int height, double res, int nx, int ny, double radius,
                      Fn&& fn) {
  if (!(radius > 0.0)) return;
  const double rc = radius / res;
  const int ry = static_cast<int>(rc) + 1;
  const double rc2 = rc * rc;
  for (int dy = -ry; dy <= ry; ++dy) {
    const int y = ny + dy;
    if (y < 0 || y >= height) continue;
    const double rem2 = rc2 - static_cast<double>(dy) * static_cast<double>(dy);
    if (rem2 < 0.0) continue;
    const int rx = static_cast<int>(std::sqrt(rem2)) + 1;
    int x0 = nx - rx;
    int x1 = nx + rx;
    if (x0 < 0) x0 = 0;
    if (x1 >= width) x1 = width - 1;
    const std::size_t row = static_cast<std::size_t>(y) * width;
    const double fdy = static_cast<double>(dy);
    for (int x = x0; x <= x1; ++x) {
      const double fdx = static_cast<double>(x - nx);
      const double d = std::sqrt(fdx * fdx + fdy * fdy) * res;
      if (d < radius) fn(row + static_cast<std::size_t>(x), d);
    }
  }
}

inline double suitability_scan(const LandscapeRaster& raster, const double* floral,
                               std::size_t nest_id, const CpfParams& params) {
  const int nx = static_cast<int>(nest_id % raster.width);
  const int ny = static_cast<int>(nest_id / raster.width);
  const double tau0 = params.tau0;
  const double f0 = params.f0;
  double s = 0.0;
  scan_disc(raster.width, raster.height, raster.resolution, nx, ny, tau0,
            [&](std::size_t j, double d) {
              const double f = floral[j];
              if (f <= f0) return;
              const double delta = tau0 * (1.0 - f0 / f) - d;
              if (delta > 0.0) s += delta;
            });
  return s;
}

/// Positive contributions of one nest at its nest-specific distance.
/// Returns the denominator of the foraging-rate normalization.
inline double nest_contributions(const LandscapeRaster& raster, const double* floral,
                                 std::size_t nest_id, double tau_i, const CpfParams& params,
                                 std::vector<std::pair<std::size_t, double>>* out) {
  const int nx = static_cast<int>(nest_id % raster.width);
  const int ny = static_cast<int>(nest_id / raster.width);
  const double f0 = params.f0;
  double denom = 0.0;
  scan_disc(raster.width, raster.height, raster.resolution, nx, ny, tau_i,
            [&](std::size_t j, double d) {
              const double f = floral[j];
              if (f <= f0) return;
              const double ds = tau_i * (1.0 - f0 / f) - d;
              if (ds > 0.0) {
                denom += ds;
                if (out) out->emplace_back(j, ds);
              }
            });
  return denom;
}

}  // namespace

double suitability_at(const LandscapeRaster& raster, const AttributeMap& attrs,
                      std::size_t nest_id, const CpfParams& params) {
  params.validate();
  if (nest_id >= raster.cell_count()) throw InputError("suitability_at: bad patch index");
  return suitability_scan(raster, attrs.floral.data().data(), nest_id, params);
}

VisitationField visitation_field(const LandscapeRaster& raster, const AttributeMap& attrs,
                                 const CpfParams& params, unsigned workers) {
  params.validate();
  raster.validate();
  if (!attrs.floral.same_shape(raster.width, raster.height) ||
      !attrs.nesting.same_shape(raster.width, raster.height)) {
    throw InputError("visitation_field: attribute maps do not match the raster");
  }

  VisitationField field;
  field.nu = Grid<double>(raster.width, raster.height, 0.0);
  field.tau_nest = Grid<double>(raster.width, raster.height, 0.0);
  field.suitability = Grid<double>(raster.width, raster.height, 0.0);

  const double* floral = attrs.floral.data().data();
  const double* nesting = attrs.nesting.data().data();

  std::vector<std::size_t> nests;
  for (std::size_t i = 0; i < raster.cell_count(); ++i) {
    if (nesting[i] > 0.0) nests.push_back(i);
  }
  if (nests.empty()) return field;

  double* tau_out = field.tau_nest.data().data();
  double* suit_out = field.suitability.data().data();
  std::vector<double>& nu = field.nu.data();

  struct Scratch {
    std::vector<double> nu;
    std::vector<std::pair<std::size_t, double>> contrib;
  };
  // Fixed chunking keeps the summation order independent of the worker count.
  constexpr std::size_t kChunk = 256;
  parallel_ordered_chunks(
      nests.size(), kChunk, workers,
      [&] {
        Scratch s;
        s.nu.assign(nu.size(), 0.0);
        return s;
      },
      [&](std::size_t begin, std::size_t end, Scratch& scratch) {
        std::fill(scratch.nu.begin(), scratch.nu.end(), 0.0);
        for (std::size_t k = begin; k < end; ++k) {
          const std::size_t i = nests[k];
          const double s = suitability_scan(raster, floral, i, params);
          const double tau_i = nest_specific_distance(s, params);
          suit_out[i] = s;
          tau_out[i] = tau_i;
          scratch.contrib.clear();
          const double denom =
              nest_contributions(raster, floral, i, tau_i, params, &scratch.contrib);
          if (denom > 0.0) {
            const double scale = nesting[i] / denom;
            for (const auto& [j, ds] : scratch.contrib) scratch.nu[j] += ds * scale;
          }
        }
      },
      [&](Scratch& scratch) {
        for (std::size_t j = 0; j < nu.size(); ++j) nu[j] += scratch.nu[j];
      });
  return field;
}

double active_nesting_mass(const LandscapeRaster& raster, const AttributeMap& attrs,
                           const CpfParams& params) {
  params.validate();
  const double* floral = attrs.floral.data().data();
  const double* nesting = attrs.nesting.data().data();
  double mass = 0.0;
  for (std::size_t i = 0; i < raster.cell_count(); ++i) {
    if (!(nesting[i] > 0.0)) continue;
    const double s = suitability_scan(raster, floral, i, params);
    const double tau_i = nest_specific_distance(s, params);
    if (nest_contributions(raster, floral, i, tau_i, params, nullptr) > 0.0) {
      mass += nesting[i];
    }
  }
  return mass;
}

}  // namespace cpfabc
