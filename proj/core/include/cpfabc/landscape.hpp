#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cpfabc/grid.hpp"
#include "cpfabc/rng.hpp"

namespace cpfabc {

/// Rasterised land-use map. Cells hold small integer category ids; geometry
/// is square cells of `resolution` meters, cell ids are row-major.
struct LandscapeRaster {
  int width = 0;
  int height = 0;
  double resolution = 0.0;  // meters per cell
  Grid<int> landuse;
  std::string id;

  std::size_t cell_count() const { return landuse.size(); }
  void validate() const;
};

/// Per-period floral distribution of one land-use category: either a Beta
/// law or a point mass on [0, 1].
struct FloralModel {
  enum class Kind { beta, point };
  Kind kind = Kind::point;
  double beta_a = 0.0;
  double beta_b = 0.0;
  double point = 0.0;

  static FloralModel beta_law(double a, double b);
  static FloralModel point_mass(double v);
  double sample(Rng& rng) const;
};

struct CategoryProfile {
  int category = 0;
  std::string name;
  double nesting = 0.0;  // nesting probability; 0/1 gives the binary maps
  std::vector<FloralModel> floral_by_period;
  double weight = 1.0;  // relative area share used by the synthetic generator

  void validate(int n_periods) const;
};

/// Frozen floral and nesting values for one (landscape, year, period).
struct AttributeMap {
  int year = 0;
  int period = 0;
  Grid<double> floral;
  Grid<double> nesting;
};

struct Patch {
  std::size_t id = 0;
  double cx = 0.0;  // centroid x in meters
  double cy = 0.0;  // centroid y in meters
  int category = 0;
};

/// Draws floral and nesting values per cell from the category profiles.
/// Pure function of its arguments: equal inputs give identical grids.
AttributeMap generate_attribute_maps(const LandscapeRaster& raster,
                                     const std::vector<CategoryProfile>& profiles,
                                     int period, int year, std::uint64_t seed);

/// One patch per cell, row-major, centroids in meters.
std::vector<Patch> patch_index(const LandscapeRaster& raster);

/// ASCII-grid I/O: header lines "width <n>", "height <n>",
/// "resolution <meters>", then height rows of width integers.
LandscapeRaster load_raster(const std::filesystem::path& path);
void save_raster(const LandscapeRaster& raster, const std::filesystem::path& path);

/// Same layout with real-valued cells, for exported fields.
void save_field_ascii(const Grid<double>& field, double resolution,
                      const std::filesystem::path& path);

/// Random blobby land-use map: category-labelled seed points, each cell
/// takes the category of its nearest seed. Guarantees every category with
/// positive weight covers at least `min_cells_per_category` cells, retrying
/// with derived seeds.
LandscapeRaster synthetic_landscape(int width, int height, double resolution,
                                    const std::vector<CategoryProfile>& profiles,
                                    int n_seed_points, std::uint64_t seed,
                                    const std::string& id, int min_cells_per_category = 4);

}  // namespace cpfabc
