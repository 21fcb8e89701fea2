#pragma once

#include <cstdint>

#include "emptybox/geometry.hpp"

namespace emptybox {

/// splitmix64 (Steele, Lea & Flood's SplittableRandom mixer). Fixed as the
/// project-wide seeded generator: pure 64-bit integer arithmetic, so the same
/// seed yields bit-identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), unbiased (rejection sampling).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Base-b radical inverse of index: reverse the base-b digits across the
/// radix point. Result in [0,1). Requires base >= 2.
double van_der_corput(std::uint64_t index, std::uint64_t base);

/// Hammersley set: point j (0-indexed) is
/// (j/n, radical inverse of j in base 2, base 3, ..., the (d-1)th prime).
/// Requires n >= 1 and d >= 2; all coordinates lie in [0,1).
PointSet hammersley(std::size_t n, std::size_t d);

/// n i.i.d. uniform points from splitmix64(seed); coordinates are drawn in
/// row-major point order, so (seed, n, d) pins the output exactly.
PointSet random_uniform(std::size_t n, std::size_t d, std::uint64_t seed);

/// Regular midpoint grid: side^d points with coordinates (i + 0.5)/side,
/// emitted in row-major order of the index tuple.
PointSet grid_points(std::size_t side, std::size_t d);

}  // namespace emptybox
