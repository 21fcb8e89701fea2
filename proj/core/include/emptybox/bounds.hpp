#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace emptybox {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// log2(d) / (4 (n + log2 d)): every n-point set in [0,1]^d leaves an empty
/// box at least this large. Requires d >= 2.
double volume_lower_bound(std::uint64_t n, std::uint64_t d);

/// 2^(d-1) * (product of the first d-1 primes): the constant c(d) such that
/// suitable n-point sets leave no empty box of volume c(d)/n. Exact integer;
/// d is capped at 10000.
BigInt volume_upper_bound_const(std::uint64_t d);

/// Exact maximum size of a pairwise properly overlapping family of
/// 2-partitions of [n]: C(n-1, floor(n/2)-1). Requires n >= 4.
BigInt p_binary_exact(std::uint64_t n);

/// Closed-form sandwich on p(a,t,n), the maximum size of a t-wise perfect
/// vector family of length n over an a-symbol alphabet.
struct PBoundsReport {
  int a = 0;
  int t = 0;
  std::uint64_t n = 0;
  std::uint64_t b = 0;  // C(a,2), number of blocks in the explicit construction
  std::uint64_t k = 0;  // floor(n / (2b)), block half-size
  BigInt lower;
  BigInt upper;
  std::string lower_formula;
  std::string upper_formula;
};

/// lower = max(t, C(2k,k)/2 for t = 2 with k >= 1);
/// upper = min(floor(C(n, ceil(n/a)) / (a(a-1))), C(n-1, floor(n/a)-1)).
/// Requires a >= 2, t >= 2, n >= a^t.
PBoundsReport p_bounds(int a, int t, std::uint64_t n);

/// Exponential-growth bases for p(a,t,n) in n.
struct AsymptoticBases {
  double lambda1 = 0.0;     // a / (a^t - 1)^(1/t): random-construction base
  double lambda2 = 0.0;     // a / ((a-1)^(a-1))^(1/a): antichain upper-bound base
  double block_base = 0.0;  // 2^(1/b), b = C(a,2): block-construction base
};

AsymptoticBases asymptotic_bases(int a, int t);

}  // namespace emptybox
