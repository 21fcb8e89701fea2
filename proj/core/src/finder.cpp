#include "emptybox/finder.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <stdexcept>
#include <string>

namespace emptybox {

namespace {

double slab_boundary(std::size_t i, std::size_t parts) {
  return static_cast<double>(i) / static_cast<double>(parts);
}

// Bin index of x in the partition {[i/parts, (i+1)/parts)}. The floor gives
// the bin up to a rounding error of one; the correction loops align the
// result with the exact double boundaries i/parts, so producer and checker
// agree bit for bit.
std::size_t slab_of(double x, std::size_t parts) {
  auto idx = static_cast<std::size_t>(x * static_cast<double>(parts));
  if (idx >= parts) idx = parts - 1;
  while (idx > 0 && x < slab_boundary(idx, parts)) --idx;
  while (idx + 1 < parts && x >= slab_boundary(idx + 1, parts)) ++idx;
  return idx;
}

}  // namespace

const char* to_string(CollisionCase c) {
  switch (c) {
    case CollisionCase::ZeroVector: return "ZERO_VECTOR";
    case CollisionCase::OnesVector: return "ONES_VECTOR";
    case CollisionCase::DuplicatePair: return "DUPLICATE_PAIR";
  }
  return "UNKNOWN";
}

SlabSelection select_min_slab(const PointSet& s) {
  if (s.dim() < 2)
    throw std::invalid_argument("select_min_slab: algorithm requires d >= 2");
  const std::size_t n = s.size();
  const std::size_t ell = std::bit_width(s.dim()) - 1;  // floor(log2 d)
  const std::size_t k = n / (ell + 1);
  const std::size_t parts = k + 1;

  const std::span<const double> axis0 = s.axis0();

  std::vector<std::uint32_t> counts(parts, 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[slab_of(axis0[i], parts)];

  std::size_t best = 0;
  for (std::size_t i = 1; i < parts; ++i)
    if (counts[i] < counts[best]) best = i;

  SlabSelection sel;
  sel.ell = ell;
  sel.k = k;
  sel.slab_index = best;
  sel.lo = slab_boundary(best, parts);
  sel.hi = slab_boundary(best + 1, parts);
  sel.inside.reserve(counts[best]);
  for (std::size_t i = 0; i < n; ++i)
    if (slab_of(axis0[i], parts) == best) sel.inside.push_back(i);

  if (sel.inside.size() > ell)
    throw std::logic_error("select_min_slab: pigeonhole violated, slab holds " +
                           std::to_string(sel.inside.size()) + " > ell = " +
                           std::to_string(ell));
  return sel;
}

BinaryEncoding encode_points(const SlabSelection& sel, const PointSet& s) {
  const std::size_t d = s.dim();
  const std::size_t m = sel.inside.size();
  BinaryEncoding enc;
  enc.bits = m;
  enc.keys.assign(d, 0);
  const double mid0 = (sel.lo + sel.hi) / 2.0;
  for (std::size_t j = 0; j < m; ++j) {
    std::span<const double> p = s.point(sel.inside[j]);
    if (p[0] > mid0) enc.keys[0] |= std::uint64_t{1} << j;
    for (std::size_t i = 1; i < d; ++i)
      if (p[i] > 0.5) enc.keys[i] |= std::uint64_t{1} << j;
  }
  return enc;
}

CollisionCertificate find_collision(const BinaryEncoding& enc) {
  const std::size_t d = enc.keys.size();
  const std::size_t m = enc.bits;
  if (m == 0 || m >= 64 || (std::uint64_t{1} << m) > d)
    throw std::logic_error("find_collision: requires 1 <= m and 2^m <= d");

  for (std::size_t i = 0; i < d; ++i)
    if (enc.keys[i] == 0) return {CollisionCase::ZeroVector, i, 0};
  const std::uint64_t ones = (std::uint64_t{1} << m) - 1;
  for (std::size_t i = 0; i < d; ++i)
    if (enc.keys[i] == ones) return {CollisionCase::OnesVector, i, 0};

  // Neither case: the d keys take values in {1, ..., 2^m - 2}, a range of
  // size 2^m - 2 < d, so a duplicate exists.
  std::vector<std::pair<std::uint64_t, std::size_t>> sorted(d);
  for (std::size_t i = 0; i < d; ++i) sorted[i] = {enc.keys[i], i};
  std::sort(sorted.begin(), sorted.end());

  bool found = false;
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (std::size_t i = 0; i + 1 < d;) {
    std::size_t j = i + 1;
    while (j < d && sorted[j].first == sorted[i].first) ++j;
    if (j - i >= 2) {
      std::pair<std::size_t, std::size_t> cand{sorted[i].second,
                                               sorted[i + 1].second};
      if (!found || cand < best) {
        best = cand;
        found = true;
      }
    }
    i = j;
  }
  if (!found)
    throw std::logic_error("find_collision: no collision despite 2^m <= d");
  return {CollisionCase::DuplicatePair, best.first, best.second};
}

FinderResult find_large_empty_box(const PointSet& s) {
  if (s.dim() < 2)
    throw std::invalid_argument("find_large_empty_box: algorithm requires d >= 2");
  const std::size_t d = s.dim();
  SlabSelection sel = select_min_slab(s);

  // Slab extents: axis 0 is the slab interval, the rest span the cube.
  std::vector<double> lo(d, 0.0), hi(d, 1.0);
  lo[0] = sel.lo;
  hi[0] = sel.hi;

  if (sel.inside.empty())
    return {AxisBox(std::move(lo), std::move(hi)), std::move(sel), std::nullopt};

  BinaryEncoding enc = encode_points(sel, s);
  CollisionCertificate cert = find_collision(enc);

  auto midpoint = [&](std::size_t axis) { return (lo[axis] + hi[axis]) / 2.0; };
  switch (cert.kind) {
    case CollisionCase::ZeroVector:
      // Every point sits in the lower half on this axis.
      lo[cert.axis_i] = midpoint(cert.axis_i);
      break;
    case CollisionCase::OnesVector:
      hi[cert.axis_i] = midpoint(cert.axis_i);
      break;
    case CollisionCase::DuplicatePair:
      // Uncovered combination "01": no point is simultaneously in the lower
      // half of axis_i and the upper half of axis_j.
      hi[cert.axis_i] = midpoint(cert.axis_i);
      lo[cert.axis_j] = midpoint(cert.axis_j);
      break;
  }
  return {AxisBox(std::move(lo), std::move(hi)), std::move(sel), cert};
}

}  // namespace emptybox
