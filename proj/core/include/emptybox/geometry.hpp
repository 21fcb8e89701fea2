#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace emptybox {

/// n points in the unit hypercube [0,1]^d, stored row-major at full double
/// precision. Duplicate points are permitted; n may be zero.
class PointSet {
 public:
  /// coords holds n*dim values in row-major order, each in [0,1].
  PointSet(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }

  double coord(std::size_t point, std::size_t axis) const {
    return coords_[point * dim_ + axis];
  }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& raw() const { return coords_; }

  /// Dense copy of coordinate 0 of every point, built at construction.
  /// Axis-0 scans (slab selection on large sets) stream this sequentially
  /// instead of striding by dim through the row-major storage.
  std::span<const double> axis0() const { return axis0_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> axis0_;
};

/// Open axis-parallel box (lo_1,hi_1) x ... x (lo_d,hi_d) contained in the
/// unit cube. Construction rejects degenerate (lo_i >= hi_i) and
/// out-of-cube extents, so the volume is always in (0,1].
class AxisBox {
 public:
  AxisBox(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lo_.size(); }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }

  /// Product of extents, multiplied in axis order 0..d-1.
  double volume() const;

  /// True iff lo_i < p_i < hi_i on every axis; a point on a face is outside.
  bool strictly_inside(std::span<const double> p) const;

  friend bool operator==(const AxisBox& a, const AxisBox& b) = default;

 private:
  std::vector<double> lo_, hi_;
};

/// True iff no point of s lies strictly inside the box. All comparisons are
/// exact; no tolerances.
bool is_empty_box(const AxisBox& box, const PointSet& s);

}  // namespace emptybox
