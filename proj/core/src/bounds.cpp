#include "emptybox/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "emptybox/primes.hpp"

namespace emptybox {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays integral at every step: after multiplying by (n-k+i) the
  // numerator is i consecutive integers, divisible by i!.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double volume_lower_bound(std::uint64_t n, std::uint64_t d) {
  if (d < 2) throw std::invalid_argument("volume_lower_bound: d must be >= 2");
  double log2d = std::log2(static_cast<double>(d));
  return log2d / (4.0 * (static_cast<double>(n) + log2d));
}

BigInt volume_upper_bound_const(std::uint64_t d) {
  if (d < 2)
    throw std::invalid_argument("volume_upper_bound_const: d must be >= 2");
  if (d > 10000)
    throw std::invalid_argument(
        "volume_upper_bound_const: d exceeds supported limit 10000");
  BigInt c = BigInt(1) << (d - 1);
  for (std::uint64_t p : first_primes(d - 1)) c *= p;
  return c;
}

BigInt p_binary_exact(std::uint64_t n) {
  if (n < 4) throw std::invalid_argument("p_binary_exact: n must be >= 4");
  return binomial(n - 1, n / 2 - 1);
}

namespace {

// a^t as a double to test n >= a^t without overflow; exact for desk-scale a,t.
double alphabet_power(int a, int t) {
  return std::pow(static_cast<double>(a), static_cast<double>(t));
}

}  // namespace

PBoundsReport p_bounds(int a, int t, std::uint64_t n) {
  if (a < 2 || t < 2)
    throw std::invalid_argument("p_bounds: requires a >= 2 and t >= 2");
  if (static_cast<double>(n) < alphabet_power(a, t))
    throw std::invalid_argument("p_bounds: requires n >= a^t");

  PBoundsReport r;
  r.a = a;
  r.t = t;
  r.n = n;
  r.b = static_cast<std::uint64_t>(a) * (a - 1) / 2;
  r.k = n / (2 * r.b);

  r.lower = t;
  r.lower_formula = "t";
  if (t == 2 && r.k >= 1) {
    BigInt block = binomial(2 * r.k, r.k) / 2;
    if (block > r.lower) {
      r.lower = block;
      r.lower_formula = "binom(2k,k)/2";
    }
  }

  // The antichain bound for t = 2 carries over to all t >= 2 because a t-wise
  // perfect family is also pairwise perfect.
  std::uint64_t ceil_na = (n + a - 1) / a;
  BigInt antichain = binomial(n, ceil_na) / (static_cast<std::uint64_t>(a) * (a - 1));
  BigInt sperner = binomial(n - 1, n / a - 1);
  if (antichain <= sperner) {
    r.upper = antichain;
    r.upper_formula = "floor(binom(n,ceil(n/a))/(a(a-1)))";
  } else {
    r.upper = sperner;
    r.upper_formula = "binom(n-1,floor(n/a)-1)";
  }
  return r;
}

AsymptoticBases asymptotic_bases(int a, int t) {
  if (a < 2 || t < 2)
    throw std::invalid_argument("asymptotic_bases: requires a >= 2 and t >= 2");
  AsymptoticBases b;
  double ad = a;
  // lambda1 = a / (a^t - 1)^(1/t), via logs to stay finite for large a, t.
  double log_atm1 = t * std::log(ad) + std::log1p(-std::pow(ad, -t));
  b.lambda1 = ad / std::exp(log_atm1 / t);
  b.lambda2 = ad / std::exp((a - 1) * std::log(ad - 1.0) / ad);
  double blocks = ad * (ad - 1.0) / 2.0;
  b.block_base = std::exp2(1.0 / blocks);
  return b;
}

}  // namespace emptybox
