#include "emptybox/geometry.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace emptybox {

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("PointSet: dim must be >= 1");
  if (coords_.size() % dim_ != 0)
    throw std::invalid_argument("PointSet: coordinate count " +
                                std::to_string(coords_.size()) +
                                " is not a multiple of dim " +
                                std::to_string(dim_));
  for (double c : coords_)
    if (!(c >= 0.0 && c <= 1.0))
      throw std::invalid_argument("PointSet: coordinate " + std::to_string(c) +
                                  " outside [0,1]");
  axis0_.resize(size());
  for (std::size_t i = 0; i < axis0_.size(); ++i) axis0_[i] = coords_[i * dim_];
}

AxisBox::AxisBox(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size())
    throw std::invalid_argument("AxisBox: lo/hi must be nonempty and equal length");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!(lo_[i] >= 0.0 && hi_[i] <= 1.0))
      throw std::invalid_argument("AxisBox: axis " + std::to_string(i) +
                                  " extent not contained in [0,1]");
    if (!(lo_[i] < hi_[i]))
      throw std::invalid_argument("AxisBox: degenerate extent on axis " +
                                  std::to_string(i));
  }
}

double AxisBox::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo_.size(); ++i) v *= hi_[i] - lo_[i];
  return v;
}

bool AxisBox::strictly_inside(std::span<const double> p) const {
  if (p.size() != lo_.size())
    throw std::invalid_argument("strictly_inside: point has dim " +
                                std::to_string(p.size()) + ", box has dim " +
                                std::to_string(lo_.size()));
  for (std::size_t i = 0; i < lo_.size(); ++i)
    if (!(lo_[i] < p[i] && p[i] < hi_[i])) return false;
  return true;
}

bool is_empty_box(const AxisBox& box, const PointSet& s) {
  if (box.dim() != s.dim())
    throw std::invalid_argument("is_empty_box: dimension mismatch");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (box.strictly_inside(s.point(i))) return false;
  return true;
}

}  // namespace emptybox
