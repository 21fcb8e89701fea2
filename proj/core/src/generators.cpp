#include "emptybox/generators.hpp"

#include <stdexcept>
#include <string>

#include "emptybox/primes.hpp"

namespace emptybox {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be > 0");
  std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

double van_der_corput(std::uint64_t index, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("van_der_corput: base must be >= 2");
  double result = 0.0;
  double inv = 1.0;
  while (index > 0) {
    inv /= static_cast<double>(base);
    result += inv * static_cast<double>(index % base);
    index /= base;
  }
  return result;
}

PointSet hammersley(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("hammersley: n must be >= 1");
  if (d < 2)
    throw std::invalid_argument(
        "hammersley: d must be >= 2 (use van_der_corput for 1-D sequences)");
  auto primes = first_primes(d - 1);
  std::vector<double> coords;
  coords.reserve(n * d);
  for (std::size_t j = 0; j < n; ++j) {
    coords.push_back(static_cast<double>(j) / static_cast<double>(n));
    for (std::size_t i = 0; i + 1 < d; ++i)
      coords.push_back(van_der_corput(j, primes[i]));
  }
  return PointSet(d, std::move(coords));
}

PointSet random_uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_uniform: d must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> coords(n * d);
  for (double& c : coords) c = rng.next_unit();
  return PointSet(d, std::move(coords));
}

PointSet grid_points(std::size_t side, std::size_t d) {
  if (side < 1) throw std::invalid_argument("grid_points: side must be >= 1");
  if (d < 1) throw std::invalid_argument("grid_points: d must be >= 1");
  double total = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    total *= static_cast<double>(side);
    if (total > 1e7)
      throw std::invalid_argument("grid_points: side^d exceeds 1e7 points");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= side;
  std::vector<double> coords;
  coords.reserve(count * d);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t i = 0; i < d; ++i)
      coords.push_back((static_cast<double>(idx[i]) + 0.5) /
                       static_cast<double>(side));
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] < side) break;
      idx[i] = 0;
    }
  }
  return PointSet(d, std::move(coords));
}

}  // namespace emptybox
