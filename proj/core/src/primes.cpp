#include "emptybox/primes.hpp"

#include <cmath>

namespace emptybox {

namespace {
constexpr std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                          29, 31, 37, 41, 43, 47, 53, 59, 61,
                                          67, 71, 73, 79, 83, 89, 97};
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::size_t i = 0; i < count && i < std::size(kSmallPrimes); ++i)
    primes.push_back(kSmallPrimes[i]);
  // Sieve of Eratosthenes for the tail, with the usual p_k < k(ln k + ln ln k)
  // upper bound on the sieve limit.
  while (primes.size() < count) {
    double k = static_cast<double>(count);
    std::size_t limit =
        static_cast<std::size_t>(k * (std::log(k) + std::log(std::log(k)))) + 16;
    std::vector<bool> composite(limit + 1, false);
    primes.clear();
    for (std::uint64_t p = 2; p <= limit && primes.size() < count; ++p) {
      if (composite[p]) continue;
      primes.push_back(p);
      for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
  }
  return primes;
}

}  // namespace emptybox
