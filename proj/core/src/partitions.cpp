#include "emptybox/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "emptybox/bounds.hpp"
#include "emptybox/generators.hpp"

namespace emptybox {

char symbol_char(unsigned symbol) {
  if (symbol >= kMaxAlphabet)
    throw std::invalid_argument("symbol_char: symbol " +
                                std::to_string(symbol) + " out of range");
  return symbol < 10 ? static_cast<char>('0' + symbol)
                     : static_cast<char>('a' + symbol - 10);
}

unsigned symbol_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a') + 10;
  throw std::invalid_argument(std::string("symbol_value: '") + c +
                              "' is not a symbol character");
}

Partition canonical_partition(Partition p) {
  for (auto& part : p) {
    if (part.empty())
      throw std::invalid_argument("canonical_partition: empty part");
    std::sort(part.begin(), part.end());
  }
  std::sort(p.begin(), p.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return p;
}

VectorFamily::VectorFamily(unsigned alphabet, std::size_t length,
                           std::vector<std::vector<std::uint8_t>> vectors)
    : a_(alphabet), n_(length), vectors_(std::move(vectors)) {
  if (a_ < 2 || a_ > kMaxAlphabet)
    throw std::invalid_argument("VectorFamily: alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabet) + "]");
  if (n_ == 0)
    throw std::invalid_argument("VectorFamily: vector length must be positive");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != n_)
      throw std::invalid_argument("VectorFamily: vector " + std::to_string(i) +
                                  " has length " +
                                  std::to_string(vectors_[i].size()) +
                                  ", expected " + std::to_string(n_));
    for (std::uint8_t s : vectors_[i])
      if (s >= a_)
        throw std::invalid_argument("VectorFamily: vector " +
                                    std::to_string(i) +
                                    " uses symbol outside the alphabet");
  }
  std::vector<std::size_t> order(vectors_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return vectors_[x] < vectors_[y];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (vectors_[order[i - 1]] == vectors_[order[i]])
      throw std::invalid_argument("VectorFamily: duplicate vectors " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]));
}

PartitionFamily::PartitionFamily(unsigned parts, std::uint32_t ground,
                                 std::vector<Partition> members)
    : a_(parts), n_(ground), members_(std::move(members)) {
  if (a_ < 2 || a_ > kMaxAlphabet)
    throw std::invalid_argument("PartitionFamily: part count must be in [2, " +
                                std::to_string(kMaxAlphabet) + "]");
  if (n_ < a_)
    throw std::invalid_argument(
        "PartitionFamily: ground set smaller than part count");
  std::vector<std::uint8_t> seen(n_ + 1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    members_[i] = canonical_partition(std::move(members_[i]));
    if (members_[i].size() != a_)
      throw std::invalid_argument("PartitionFamily: member " +
                                  std::to_string(i) + " has " +
                                  std::to_string(members_[i].size()) +
                                  " parts, expected " + std::to_string(a_));
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t total = 0;
    for (const auto& part : members_[i])
      for (std::uint32_t e : part) {
        if (e < 1 || e > n_)
          throw std::invalid_argument("PartitionFamily: member " +
                                      std::to_string(i) + " has element " +
                                      std::to_string(e) + " outside [1, " +
                                      std::to_string(n_) + "]");
        if (seen[e]++)
          throw std::invalid_argument("PartitionFamily: member " +
                                      std::to_string(i) +
                                      " repeats element " + std::to_string(e));
        ++total;
      }
    if (total != n_)
      throw std::invalid_argument("PartitionFamily: member " +
                                  std::to_string(i) +
                                  " does not cover the ground set");
  }
  std::vector<std::size_t> order(members_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return members_[x] < members_[y];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (members_[order[i - 1]] == members_[order[i]])
      throw std::invalid_argument("PartitionFamily: duplicate members " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]));
}

PartitionFamily vectors_to_partitions(const VectorFamily& vf) {
  if (vf.length() > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("vectors_to_partitions: vectors too long");
  std::vector<Partition> members;
  members.reserve(vf.size());
  for (std::size_t i = 0; i < vf.size(); ++i) {
    const auto& v = vf.vector(i);
    Partition parts(vf.alphabet());
    for (std::size_t r = 0; r < v.size(); ++r)
      parts[v[r]].push_back(static_cast<std::uint32_t>(r + 1));
    for (unsigned s = 0; s < vf.alphabet(); ++s)
      if (parts[s].empty())
        throw std::invalid_argument(
            "vectors_to_partitions: vector " + std::to_string(i) +
            " never uses symbol " + std::string(1, symbol_char(s)) +
            ", leaving an empty part");
    members.push_back(std::move(parts));
  }
  return PartitionFamily(vf.alphabet(),
                         static_cast<std::uint32_t>(vf.length()),
                         std::move(members));
}

VectorFamily partitions_to_vectors(const PartitionFamily& pf) {
  std::vector<std::vector<std::uint8_t>> vectors;
  vectors.reserve(pf.size());
  for (const Partition& p : pf.members()) {
    std::vector<std::uint8_t> v(pf.ground());
    for (std::size_t j = 0; j < p.size(); ++j)
      for (std::uint32_t e : p[j]) v[e - 1] = static_cast<std::uint8_t>(j);
    vectors.push_back(std::move(v));
  }
  return VectorFamily(pf.parts(), pf.ground(), std::move(vectors));
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

PerfectnessReport verify_matrix(
    const std::vector<std::vector<std::uint8_t>>& vecs, unsigned a,
    unsigned t) {
  if (t < 2)
    throw std::invalid_argument("verify_perfect: t must be at least 2");
  const std::size_t k = vecs.size();
  if (k < t)
    throw std::invalid_argument("verify_perfect: family of " +
                                std::to_string(k) +
                                " vectors cannot be checked at t = " +
                                std::to_string(t));
  const std::size_t n = vecs.front().size();

  constexpr std::uint64_t kMaxCells = 10'000'000;
  const std::uint64_t cells = checked_pow(a, t, kMaxCells);
  if (cells > kMaxCells)
    throw std::invalid_argument("verify_perfect: a^t exceeds " +
                                std::to_string(kMaxCells) + " cells");

  std::vector<std::uint64_t> pw(t);  // pw[j] = a^(t-1-j)
  pw[t - 1] = 1;
  for (std::size_t j = t - 1; j-- > 0;) pw[j] = pw[j + 1] * a;

  std::vector<std::uint32_t> stamp(cells, 0);
  std::uint32_t epoch = 0;

  std::vector<std::size_t> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (epoch == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 0;
    }
    ++epoch;
    std::uint64_t covered = 0;
    for (std::size_t r = 0; r < n && covered < cells; ++r) {
      std::uint64_t cell = 0;
      for (unsigned j = 0; j < t; ++j) cell += pw[j] * vecs[idx[j]][r];
      if (stamp[cell] != epoch) {
        stamp[cell] = epoch;
        ++covered;
      }
    }
    if (covered < cells) {
      std::uint64_t missing = 0;
      while (stamp[missing] == epoch) ++missing;
      std::string alpha(t, '0');
      for (unsigned j = 0; j < t; ++j)
        alpha[j] = symbol_char(static_cast<unsigned>(missing / pw[j] % a));
      return {false, t, CoverageWitness{idx, std::move(alpha)}};
    }
    std::size_t pos = t;
    while (pos-- > 0 && idx[pos] == k - t + pos) {
    }
    if (pos == std::numeric_limits<std::size_t>::max()) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {true, t, std::nullopt};
}

// Ascending r-subsets of {lo, ..., hi} in lexicographic order.
template <typename Fn>
void for_each_combination(std::uint32_t lo, std::uint32_t hi, std::uint32_t r,
                          Fn fn) {
  if (r == 0) {
    fn(std::vector<std::uint32_t>{});
    return;
  }
  if (hi < lo || hi - lo + 1 < r) return;
  std::vector<std::uint32_t> combo(r);
  std::iota(combo.begin(), combo.end(), lo);
  while (true) {
    fn(combo);
    std::size_t pos = r;
    while (pos-- > 0 && combo[pos] == hi - (r - 1 - pos)) {
    }
    if (pos == std::numeric_limits<std::size_t>::max()) break;
    ++combo[pos];
    for (std::size_t j = pos + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace

PerfectnessReport verify_perfect(const VectorFamily& vf, unsigned t) {
  return verify_matrix(vf.vectors(), vf.alphabet(), t);
}

PerfectnessReport verify_perfect(const PartitionFamily& pf, unsigned t) {
  return verify_perfect(partitions_to_vectors(pf), t);
}

PartitionFamily construct_binary_optimal(std::uint32_t n) {
  if (n < 4)
    throw std::invalid_argument("construct_binary_optimal: need n >= 4");
  const std::uint32_t h = n / 2;
  if (binomial(n - 1, h - 1) * n > 100'000'000)
    throw std::runtime_error(
        "construct_binary_optimal: family too large to materialize");
  std::vector<Partition> members;
  for_each_combination(2, n, h - 1, [&](const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> first{1};
    first.insert(first.end(), c.begin(), c.end());
    std::vector<std::uint32_t> second;
    second.reserve(n - h);
    std::size_t ci = 0;
    for (std::uint32_t e = 2; e <= n; ++e) {
      if (ci < c.size() && c[ci] == e)
        ++ci;
      else
        second.push_back(e);
    }
    members.push_back({std::move(first), std::move(second)});
  });
  return PartitionFamily(2, n, std::move(members));
}

PartitionFamily construct_block_family(unsigned a, std::uint32_t n) {
  if (a < 2 || a > kMaxAlphabet)
    throw std::invalid_argument(
        "construct_block_family: part count must be in [2, " +
        std::to_string(kMaxAlphabet) + "]");
  const std::uint64_t b = std::uint64_t{a} * (a - 1) / 2;
  const std::uint32_t k = static_cast<std::uint32_t>(n / (2 * b));
  if (k == 0)
    throw std::invalid_argument(
        "construct_block_family: n too small for a (need n >= 2*C(a,2) = " +
        std::to_string(2 * b) + ")");
  if (a == 2 && k < 2)
    throw std::invalid_argument(
        "construct_block_family: family would be trivial for a = 2 (need n "
        ">= 4)");
  const BigInt fs_big = binomial(2 * std::uint64_t{k} - 1, k - 1);
  if (fs_big * n > 100'000'000)
    throw std::runtime_error(
        "construct_block_family: family too large to materialize");
  const auto fs = fs_big.convert_to<std::size_t>();

  // Balanced halves of a template block {1,...,2k} containing 1, lex order.
  std::vector<std::vector<std::uint32_t>> halves;
  halves.reserve(fs);
  for_each_combination(2, 2 * k, k - 1,
                       [&](const std::vector<std::uint32_t>& c) {
                         std::vector<std::uint32_t> half{1};
                         half.insert(half.end(), c.begin(), c.end());
                         halves.push_back(std::move(half));
                       });

  const std::uint32_t covered = static_cast<std::uint32_t>(2 * k * b);
  std::vector<Partition> members;
  members.reserve(fs);
  std::vector<std::uint8_t> in_half(2 * k + 1);
  for (std::size_t m = 0; m < fs; ++m) {
    std::fill(in_half.begin(), in_half.end(), 0);
    for (std::uint32_t e : halves[m]) in_half[e] = 1;
    Partition parts(a);
    std::uint32_t offset = 0;
    for (unsigned i = 0; i + 1 < a; ++i)
      for (unsigned j = i + 1; j < a; ++j) {
        for (std::uint32_t e = 1; e <= 2 * k; ++e)
          parts[in_half[e] ? i : j].push_back(offset + e);
        offset += 2 * k;
      }
    for (std::uint32_t e = covered + 1; e <= n; ++e) parts[0].push_back(e);
    members.push_back(std::move(parts));
  }
  return PartitionFamily(a, n, std::move(members));
}

RandomFamilySearch random_perfect_family(unsigned a, unsigned t,
                                         std::uint32_t n, std::size_t k,
                                         std::uint64_t seed,
                                         unsigned max_attempts) {
  if (a < 2 || a > kMaxAlphabet)
    throw std::invalid_argument(
        "random_perfect_family: alphabet size must be in [2, " +
        std::to_string(kMaxAlphabet) + "]");
  if (t < 2)
    throw std::invalid_argument("random_perfect_family: t must be at least 2");
  if (k < t)
    throw std::invalid_argument(
        "random_perfect_family: need at least t vectors");
  if (max_attempts == 0)
    throw std::invalid_argument(
        "random_perfect_family: max_attempts must be positive");
  const std::uint64_t need =
      checked_pow(a, t, std::numeric_limits<std::uint64_t>::max() / 2);
  if (n < need)
    throw std::invalid_argument("random_perfect_family: n must be at least "
                                "a^t for a perfect family to exist");

  SplitMix64 rng(seed);
  RandomFamilySearch out;
  std::vector<std::vector<std::uint8_t>> vecs(k,
                                              std::vector<std::uint8_t>(n));
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    for (auto& v : vecs)
      for (auto& s : v) s = static_cast<std::uint8_t>(rng.next_below(a));
    PerfectnessReport report = verify_matrix(vecs, a, t);
    out.attempts = attempt;
    if (report.is_perfect) {
      out.family = VectorFamily(a, n, vecs);
      out.last_witness.reset();
      return out;
    }
    out.last_witness = std::move(report.witness);
  }
  return out;
}

namespace {

std::vector<std::vector<std::uint8_t>> canonical_surjective_vectors(
    unsigned a, std::uint32_t n) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(n);
  auto rec = [&](auto&& self, std::uint32_t pos, unsigned used) -> void {
    if (used + (n - pos) < a) return;  // cannot reach a symbols any more
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    const unsigned limit = std::min(used, a - 1);
    for (unsigned s = 0; s <= limit; ++s) {
      cur[pos] = static_cast<std::uint8_t>(s);
      self(self, pos + 1, std::max(used, s + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Pairwise properly-overlapping test with reusable stamp table.
struct PairChecker {
  unsigned a;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  explicit PairChecker(unsigned alphabet)
      : a(alphabet), stamp(std::size_t{alphabet} * alphabet, 0) {}

  bool covers(const std::vector<std::uint8_t>& u,
              const std::vector<std::uint8_t>& v) {
    if (epoch == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 0;
    }
    ++epoch;
    const std::size_t want = std::size_t{a} * a;
    std::size_t got = 0;
    for (std::size_t r = 0; r < u.size(); ++r) {
      const std::size_t cell = std::size_t{u[r]} * a + v[r];
      if (stamp[cell] != epoch) {
        stamp[cell] = epoch;
        if (++got == want) return true;
      }
    }
    return false;
  }
};

class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<std::vector<std::uint64_t>> adjacency)
      : adj_(std::move(adjacency)),
        v_(adj_.size()),
        w_(adj_.empty() ? 0 : adj_.front().size()) {}

  std::size_t solve() {
    if (v_ == 0) return 0;
    std::vector<std::uint64_t> all(w_, 0);
    for (std::size_t i = 0; i < v_; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    expand(all, 0);
    return best_;
  }

 private:
  static bool any(const std::vector<std::uint64_t>& bs) {
    for (std::uint64_t w : bs)
      if (w) return true;
    return false;
  }

  void expand(const std::vector<std::uint64_t>& p, std::size_t rsize) {
    // Greedy coloring orders candidates and bounds the clique extension.
    std::vector<std::size_t> order, colors;
    std::vector<std::uint64_t> uncolored = p;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      std::vector<std::uint64_t> q = uncolored;
      while (true) {
        std::size_t v = v_;
        for (std::size_t w = 0; w < w_; ++w)
          if (q[w]) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
            break;
          }
        if (v >= v_) break;
        q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t w = 0; w < w_; ++w) q[w] &= ~adj_[v][w];
        order.push_back(v);
        colors.push_back(color);
      }
    }
    std::vector<std::uint64_t> rem = p;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (rsize + colors[i] <= best_) return;
      const std::size_t v = order[i];
      std::vector<std::uint64_t> next(w_);
      bool nonempty = false;
      for (std::size_t w = 0; w < w_; ++w) {
        next[w] = rem[w] & adj_[v][w];
        nonempty |= next[w] != 0;
      }
      if (!nonempty) {
        if (rsize + 1 > best_) best_ = rsize + 1;
      } else {
        expand(next, rsize + 1);
      }
      rem[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  std::size_t v_, w_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t brute_force_p(unsigned a, unsigned t, std::uint32_t n,
                          double budget) {
  if (a < 2 || a > kMaxAlphabet)
    throw std::invalid_argument("brute_force_p: alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabet) + "]");
  if (t < 2)
    throw std::invalid_argument("brute_force_p: t must be at least 2");
  if (n == 0)
    throw std::invalid_argument("brute_force_p: n must be positive");

  const double space = std::pow(static_cast<double>(a), static_cast<double>(n));
  const double limit = budget > 0 ? budget : (t == 2 ? 1e6 : 1e4);
  if (space > limit)
    throw std::runtime_error("brute_force_p: search space a^n = " +
                             std::to_string(space) + " exceeds the budget of " +
                             std::to_string(limit));

  const auto cand = canonical_surjective_vectors(a, n);
  const std::size_t v = cand.size();
  if (v > 20000)
    throw std::runtime_error("brute_force_p: " + std::to_string(v) +
                             " canonical partitions is too many for the "
                             "exact search (cap 20000)");
  if (v == 0) return 0;

  PairChecker checker(a);
  const std::size_t words = (v + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(
      v, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (checker.covers(cand[i], cand[j])) {
        adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }

  if (t == 2) return CliqueSolver(std::move(adj)).solve();

  // t > 2: backtracking in candidate order; each extension re-checks only
  // the t-subsets that include the new member.
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::uint8_t>> subset;
  auto extends = [&](std::size_t next) {
    for (std::size_t c : chosen)
      if (!(adj[c][next / 64] >> (next % 64) & 1)) return false;
    if (chosen.size() + 1 < t) return true;
    bool ok = true;
    for_each_combination(
        0, static_cast<std::uint32_t>(chosen.size()) - 1, t - 1,
        [&](const std::vector<std::uint32_t>& c) {
          if (!ok) return;
          subset.clear();
          for (std::uint32_t ci : c) subset.push_back(cand[chosen[ci]]);
          subset.push_back(cand[next]);
          if (!verify_matrix(subset, a, t).is_perfect) ok = false;
        });
    return ok;
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = start; i < v; ++i) {
      if (chosen.size() + (v - i) <= best) break;
      if (!extends(i)) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

double lym_check(const PartitionFamily& pf) {
  boost::multiprecision::cpp_rational sum = 0;
  const unsigned a = pf.parts();
  for (const Partition& p : pf.members())
    for (const auto& part : p)
      sum += boost::multiprecision::cpp_rational(
          BigInt(a - 1), binomial(pf.ground(), part.size()));
  return sum.convert_to<double>();
}

}  // namespace emptybox
