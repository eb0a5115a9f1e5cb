#pragma once

#include "cpfabc/grid.hpp"
#include "cpfabc/landscape.hpp"

namespace cpfabc {

/// Parameters of the central-place foraging model.
struct CpfParams {
  double tau0 = 0.0;  // asymptotic maximum flight distance, meters
  double f0 = 0.0;    // lowest floral quality ever visited
  double a = 0.0;     // suitability (square-root scale) at half-distance
  double b = 0.0;     // slope of the distance response

  void validate() const;
};

/// Per-cell outputs of one model run. `tau_nest` and `suitability` are
/// filled only at nest cells (q > 0); other cells hold 0.
struct VisitationField {
  Grid<double> nu;
  Grid<double> tau_nest;
  Grid<double> suitability;

  double total_visitation() const;
};

/// Maximum distance a bee flies for a patch of quality f. Requires f >= f0.
double max_flight_distance(double f, const CpfParams& params);

/// Nest suitability: sum of positive distance savings over patches within
/// tau0 of the nest.
double suitability_at(const LandscapeRaster& raster, const AttributeMap& attrs,
                      std::size_t nest_id, const CpfParams& params);

/// Nest-specific maximum distance, a decreasing logistic in sqrt(s).
double nest_specific_distance(double s, const CpfParams& params);

/// Full visitation-rate field. Each nest with at least one positive
/// contribution distributes exactly its nesting value over the reachable
/// patches, so the field total equals the sum of active nesting values.
/// Deterministic for any worker count.
VisitationField visitation_field(const LandscapeRaster& raster, const AttributeMap& attrs,
                                 const CpfParams& params, unsigned workers = 1);

/// Sum of nesting values of nests with at least one positive contribution
/// (the mass that visitation_field conserves).
double active_nesting_mass(const LandscapeRaster& raster, const AttributeMap& attrs,
                           const CpfParams& params);

}  // namespace cpfabc
