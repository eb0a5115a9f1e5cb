#include "cpfabc/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cpfabc/csvio.hpp"
#include "cpfabc/errors.hpp"

namespace cpfabc {

void LandscapeRaster::validate() const {
  if (width < 1 || height < 1) throw InputError("raster: dimensions must be >= 1");
  if (!(resolution > 0.0)) throw InputError("raster: resolution must be positive");
  if (!landuse.same_shape(width, height)) throw InputError("raster: grid shape mismatch");
}

FloralModel FloralModel::beta_law(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("floral beta parameters must be positive");
  FloralModel m;
  m.kind = Kind::beta;
  m.beta_a = a;
  m.beta_b = b;
  return m;
}

FloralModel FloralModel::point_mass(double v) {
  if (v < 0.0 || v > 1.0) throw ConfigError("floral point mass must be in [0,1]");
  FloralModel m;
  m.kind = Kind::point;
  m.point = v;
  return m;
}

double FloralModel::sample(Rng& rng) const {
  return kind == Kind::beta ? rng.beta(beta_a, beta_b) : point;
}

void CategoryProfile::validate(int n_periods) const {
  if (nesting < 0.0 || nesting > 1.0) {
    throw ConfigError("profile '" + name + "': nesting must be in [0,1]");
  }
  if (static_cast<int>(floral_by_period.size()) < n_periods) {
    throw ConfigError("profile '" + name + "': needs a floral model for every period");
  }
  if (weight < 0.0) throw ConfigError("profile '" + name + "': negative weight");
}

namespace {

const CategoryProfile& profile_for(const std::vector<CategoryProfile>& profiles, int category) {
  for (const auto& p : profiles) {
    if (p.category == category) return p;
  }
  throw ConfigError("no category profile for land-use id " + std::to_string(category));
}

}  // namespace

AttributeMap generate_attribute_maps(const LandscapeRaster& raster,
                                     const std::vector<CategoryProfile>& profiles,
                                     int period, int year, std::uint64_t seed) {
  raster.validate();
  // Resolve every category up front so a missing profile fails before any draw.
  std::vector<const CategoryProfile*> by_cell(raster.cell_count());
  for (std::size_t i = 0; i < raster.cell_count(); ++i) {
    by_cell[i] = &profile_for(profiles, raster.landuse[i]);
  }

  AttributeMap map;
  map.year = year;
  map.period = period;
  map.floral = Grid<double>(raster.width, raster.height, 0.0);
  map.nesting = Grid<double>(raster.width, raster.height, 0.0);

  Rng rng(mix_seed(seed, fnv1a64_str(raster.id)));
  for (std::size_t i = 0; i < raster.cell_count(); ++i) {
    const CategoryProfile& prof = *by_cell[i];
    if (period < 0 || period >= static_cast<int>(prof.floral_by_period.size())) {
      throw ConfigError("profile '" + prof.name + "': no floral model for period " +
                        std::to_string(period));
    }
    map.floral[i] = prof.floral_by_period[period].sample(rng);
    if (prof.nesting <= 0.0) {
      map.nesting[i] = 0.0;
    } else if (prof.nesting >= 1.0) {
      map.nesting[i] = 1.0;
    } else {
      map.nesting[i] = rng.uniform() < prof.nesting ? 1.0 : 0.0;
    }
  }
  return map;
}

std::vector<Patch> patch_index(const LandscapeRaster& raster) {
  raster.validate();
  std::vector<Patch> patches;
  patches.reserve(raster.cell_count());
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      Patch p;
      p.id = static_cast<std::size_t>(y) * raster.width + x;
      p.cx = (x + 0.5) * raster.resolution;
      p.cy = (y + 0.5) * raster.resolution;
      p.category = raster.landuse.at(x, y);
      patches.push_back(p);
    }
  }
  return patches;
}

namespace {

std::string expect_header(std::istringstream& in, const std::string& key) {
  std::string word, value;
  if (!(in >> word >> value) || word != key) {
    throw IoError("raster header: expected '" + key + " <value>'");
  }
  return value;
}

}  // namespace

LandscapeRaster load_raster(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  LandscapeRaster raster;
  raster.width = static_cast<int>(parse_int(expect_header(in, "width")));
  raster.height = static_cast<int>(parse_int(expect_header(in, "height")));
  raster.resolution = parse_double(expect_header(in, "resolution"));
  if (raster.width < 1 || raster.height < 1 || !(raster.resolution > 0)) {
    throw IoError("raster header: invalid dimensions in " + path.string());
  }
  raster.landuse = Grid<int>(raster.width, raster.height, 0);
  for (std::size_t i = 0; i < raster.cell_count(); ++i) {
    long long v;
    if (!(in >> v)) throw IoError("raster body: too few cells in " + path.string());
    raster.landuse[i] = static_cast<int>(v);
  }
  long long extra;
  if (in >> extra) throw IoError("raster body: too many cells in " + path.string());
  raster.id = path.stem().string();
  return raster;
}

void save_raster(const LandscapeRaster& raster, const std::filesystem::path& path) {
  raster.validate();
  std::string out;
  out += "width " + std::to_string(raster.width) + "\n";
  out += "height " + std::to_string(raster.height) + "\n";
  out += "resolution " + format_double(raster.resolution) + "\n";
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      if (x) out.push_back(' ');
      out += std::to_string(raster.landuse.at(x, y));
    }
    out.push_back('\n');
  }
  write_text_file(path, out);
}

void save_field_ascii(const Grid<double>& field, double resolution,
                      const std::filesystem::path& path) {
  std::string out;
  out += "width " + std::to_string(field.width()) + "\n";
  out += "height " + std::to_string(field.height()) + "\n";
  out += "resolution " + format_double(resolution) + "\n";
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      if (x) out.push_back(' ');
      out += format_double(field.at(x, y));
    }
    out.push_back('\n');
  }
  write_text_file(path, out);
}

LandscapeRaster synthetic_landscape(int width, int height, double resolution,
                                    const std::vector<CategoryProfile>& profiles,
                                    int n_seed_points, std::uint64_t seed,
                                    const std::string& id, int min_cells_per_category) {
  if (profiles.empty()) throw ConfigError("synthetic_landscape: no category profiles");
  if (n_seed_points < 1) throw ConfigError("synthetic_landscape: need at least one seed point");
  double total_weight = 0.0;
  for (const auto& p : profiles) total_weight += p.weight;
  if (!(total_weight > 0.0)) throw ConfigError("synthetic_landscape: zero total weight");

  for (int attempt = 0; attempt < 32; ++attempt) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<double> sx(n_seed_points), sy(n_seed_points);
    std::vector<int> scat(n_seed_points);
    for (int s = 0; s < n_seed_points; ++s) {
      sx[s] = rng.uniform(0.0, width);
      sy[s] = rng.uniform(0.0, height);
      double u = rng.uniform() * total_weight;
      int pick = 0;
      for (std::size_t k = 0; k < profiles.size(); ++k) {
        u -= profiles[k].weight;
        if (u <= 0.0) {
          pick = static_cast<int>(k);
          break;
        }
      }
      scat[s] = profiles[pick].category;
    }

    LandscapeRaster raster;
    raster.width = width;
    raster.height = height;
    raster.resolution = resolution;
    raster.id = id;
    raster.landuse = Grid<int>(width, height, profiles[0].category);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        double best = std::numeric_limits<double>::infinity();
        int best_cat = profiles[0].category;
        for (int s = 0; s < n_seed_points; ++s) {
          const double dx = (x + 0.5) - sx[s];
          const double dy = (y + 0.5) - sy[s];
          const double d2 = dx * dx + dy * dy;
          if (d2 < best) {
            best = d2;
            best_cat = scat[s];
          }
        }
        raster.landuse.at(x, y) = best_cat;
      }
    }

    bool ok = true;
    for (const auto& p : profiles) {
      if (p.weight <= 0.0) continue;
      const long count = std::count(raster.landuse.data().begin(), raster.landuse.data().end(),
                                    p.category);
      if (count < min_cells_per_category) {
        ok = false;
        break;
      }
    }
    if (ok) return raster;
  }
  throw ConfigError("synthetic_landscape: could not realise all categories for '" + id + "'");
}

}  // namespace cpfabc
