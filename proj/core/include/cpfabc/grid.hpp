#pragma once

#include <cstddef>
#include <vector>

#include "cpfabc/errors.hpp"

namespace cpfabc {

/// Dense row-major grid. Cell (x, y) is column x of row y; the linear cell
/// id used throughout is y * width + x.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height),
        cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    if (width < 1 || height < 1) throw InputError("Grid: dimensions must be >= 1");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  T& at(int x, int y) { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
  const T& at(int x, int y) const { return cells_[static_cast<std::size_t>(y) * width_ + x]; }

  T& operator[](std::size_t id) { return cells_[id]; }
  const T& operator[](std::size_t id) const { return cells_[id]; }

  std::vector<T>& data() { return cells_; }
  const std::vector<T>& data() const { return cells_; }

  bool same_shape(int w, int h) const { return width_ == w && height_ == h; }

  bool operator==(const Grid&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

}  // namespace cpfabc
