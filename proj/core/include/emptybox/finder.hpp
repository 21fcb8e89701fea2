#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "emptybox/geometry.hpp"

namespace emptybox {

/// The least-occupied slab of the first-axis partition of the cube into
/// k+1 cells of equal volume, where ell = floor(log2 d) and
/// k = floor(n/(ell+1)). By pigeonhole the slab holds at most ell points.
struct SlabSelection {
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t slab_index = 0;
  double lo = 0.0;  // slab_index / (k+1)
  double hi = 1.0;  // (slab_index + 1) / (k+1)
  std::vector<std::size_t> inside;  // indices of points assigned to the slab
};

/// O(n) scan with a (k+1)-cell counter array. Points are binned by
/// floor(x1 * (k+1)) and then nudged so that the bin boundaries agree exactly
/// with the double values i/(k+1); x1 = 1 lands in the last slab. Ties on the
/// minimum count go to the lowest slab index. Requires d >= 2.
SlabSelection select_min_slab(const PointSet& s);

/// Binary encodings of the slab's m points, one m-bit key per axis. Bit j of
/// key i is 0 when the i-th coordinate of the j-th inside point is <= the
/// midpoint of the slab's extent on axis i, else 1. Axis 0 uses the slab
/// interval; all other axes use [0,1] with midpoint 1/2.
struct BinaryEncoding {
  std::size_t bits = 0;             // m, number of encoded points
  std::vector<std::uint64_t> keys;  // d keys, one per axis
};

BinaryEncoding encode_points(const SlabSelection& sel, const PointSet& s);

enum class CollisionCase { ZeroVector, OnesVector, DuplicatePair };

const char* to_string(CollisionCase c);

/// Certifies an empty half or quarter of the slab: an all-zero axis key, an
/// all-ones axis key, or a duplicate key pair (axis_i < axis_j) whose
/// uncovered two-bit combination is fixed to "01".
struct CollisionCertificate {
  CollisionCase kind = CollisionCase::ZeroVector;
  std::size_t axis_i = 0;
  std::size_t axis_j = 0;  // DuplicatePair only
};

/// Requires 1 <= m and 2^m <= d, which guarantees a collision: all-zero keys
/// are reported first (lowest axis), then all-ones, then the
/// lexicographically first duplicate pair found by sorting the keys.
CollisionCertificate find_collision(const BinaryEncoding& enc);

struct FinderResult {
  AxisBox box;
  SlabSelection slab;
  /// Empty when the slab itself had no points and is returned whole.
  std::optional<CollisionCertificate> certificate;
};

/// Finds an empty box of volume at least log2(d) / (4 (n + log2 d)) amidst
/// the points of s, in O(n + d log d) time. Deterministic: identical inputs
/// give bit-identical outputs. Requires d >= 2.
FinderResult find_large_empty_box(const PointSet& s);

}  // namespace emptybox
