#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace emptybox {

/// First `count` primes: 2, 3, 5, ... Hardcoded through the 25th prime (97),
/// sieved beyond that.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace emptybox
