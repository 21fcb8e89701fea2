#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace emptybox {

// Symbols of the alphabet {0,...,a-1} print as 0-9 then a-z, capping the
// supported alphabet at 36.
inline constexpr unsigned kMaxAlphabet = 36;
char symbol_char(unsigned symbol);
unsigned symbol_value(char c);

// One unordered a-partition of {1,...,n}, parts holding 1-based elements.
// Canonical form: elements ascending within parts, parts ordered by their
// minimum element.
using Partition = std::vector<std::vector<std::uint32_t>>;

Partition canonical_partition(Partition p);

// k distinct vectors of equal length over {0,...,a-1}. Perfect multisets
// are necessarily sets, so duplicates are rejected at construction.
class VectorFamily {
 public:
  VectorFamily(unsigned alphabet, std::size_t length,
               std::vector<std::vector<std::uint8_t>> vectors);

  unsigned alphabet() const { return a_; }
  std::size_t length() const { return n_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::vector<std::uint8_t>>& vectors() const {
    return vectors_;
  }
  const std::vector<std::uint8_t>& vector(std::size_t i) const {
    return vectors_.at(i);
  }

  friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

 private:
  unsigned a_;
  std::size_t n_;
  std::vector<std::vector<std::uint8_t>> vectors_;
};

// k distinct unordered a-partitions of {1,...,n}, each stored canonically.
class PartitionFamily {
 public:
  PartitionFamily(unsigned parts, std::uint32_t ground,
                  std::vector<Partition> members);

  unsigned parts() const { return a_; }
  std::uint32_t ground() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Partition>& members() const { return members_; }
  const Partition& member(std::size_t i) const { return members_.at(i); }

  friend bool operator==(const PartitionFamily&,
                         const PartitionFamily&) = default;

 private:
  unsigned a_;
  std::uint32_t n_;
  std::vector<Partition> members_;
};

// A t-tuple of vectors together with a symbol string they never realize.
struct CoverageWitness {
  std::vector<std::size_t> indices;  // 0-based vector indices, ascending
  std::string alpha;                 // uncovered string, one symbol per index
};

struct PerfectnessReport {
  bool is_perfect = false;
  unsigned t = 0;
  std::optional<CoverageWitness> witness;  // engaged iff not perfect
};

// Element r of {1,...,n} joins the part labeled by vector symbol v[r].
// Every symbol must appear in every vector (no empty parts).
PartitionFamily vectors_to_partitions(const VectorFamily& vf);

// Inverse map: element r gets the index of its part in canonical order.
VectorFamily partitions_to_vectors(const PartitionFamily& pf);

// Checks the covering condition over every ascending t-subset of vectors:
// each of the a^t symbol strings must occur at some coordinate. The witness
// is the first failing subset in lexicographic order with its smallest
// uncovered string.
PerfectnessReport verify_perfect(const VectorFamily& vf, unsigned t);
PerfectnessReport verify_perfect(const PartitionFamily& pf, unsigned t);

// All floor(n/2)-subsets of {1,...,n} containing 1, in lexicographic order,
// each paired with its complement. Size C(n-1, floor(n/2)-1); pairwise
// properly overlapping.
PartitionFamily construct_binary_optimal(std::uint32_t n);

// Block construction: split {1,...,n} into b = C(a,2) consecutive blocks of
// size 2k, k = floor(n/(2b)); member m applies the m-th balanced
// 2-partition (the half with the block minimum, enumerated lexicographically)
// to every block, giving the half with the minimum to the lower part index;
// leftover elements join the first part. Size C(2k,k)/2.
PartitionFamily construct_block_family(unsigned a, std::uint32_t n);

struct RandomFamilySearch {
  std::optional<VectorFamily> family;  // engaged on success
  unsigned attempts = 0;               // draws consumed
  std::optional<CoverageWitness> last_witness;  // from the last failed draw
};

// Draws k random length-n vectors over {0,...,a-1} from a seeded generator
// until the family verifies t-wise perfect, redrawing at most max_attempts
// times. Duplicate rows simply fail verification and trigger a redraw.
RandomFamilySearch random_perfect_family(unsigned a, unsigned t,
                                         std::uint32_t n, std::size_t k,
                                         std::uint64_t seed,
                                         unsigned max_attempts = 10);

// Exact maximum size of a t-wise perfect family of length-n vectors over
// {0,...,a-1}, by search over canonical surjective vectors (one partition
// per relabeling class). t = 2 runs a maximum-clique branch and bound on
// the pairwise-compatibility graph; t > 2 runs plain backtracking. budget
// bounds the a^n raw search space (0 picks the mode default: 1e6 for t = 2,
// 1e4 otherwise).
std::size_t brute_force_p(unsigned a, unsigned t, std::uint32_t n,
                          double budget = 0);

// Sum of (a-1)/C(n,|A|) over all parts A of all members, in exact rational
// arithmetic. At most 1 for pairwise properly overlapping families.
double lym_check(const PartitionFamily& pf);

}  // namespace emptybox
