#pragma once

// The pair-counting sequence a_n = |{(i,j) : 0 <= i,j < n, i AND j > 0}|,
// computed three independent ways: quadratic enumeration, the two-branch
// halving recursion, and (for the complement) a digit DP over the bits of n.

#include <array>
#include <map>

#include "seqcheck/core.hpp"

namespace seqcheck {

// Memo for the halving recursion. Evaluating index n touches at most
// 2*bit_length(n) + 4 distinct indices.
using RecursionMemo = std::map<BigIndex, SeqValue>;

// Count pairs (i,j) with 0 <= i,j < n and i AND j nonzero by testing
// every ordered pair. Oracle path; O(n^2).
inline SeqValue and_pairs_bruteforce(Index n, Index guard = kBruteForceGuard) {
  check_guard(n, guard, "brute-force");
  std::uint64_t count = 0;
  for (Index i = 1; i < n; ++i) {
    for (Index j = 1; j < n; ++j) {
      if ((i & j) != 0) ++count;
    }
  }
  return SeqValue(count);
}

// Evaluate a_n through the recursion
//   a_{2k}   = 3 a_k + k^2
//   a_{2k+1} = a_k + 2 a_{k+1} + k^2 - 1
// with a_0 = a_1 = 0. Runs in O(bit_length(n)) big-integer steps.
inline const SeqValue& and_pairs_recursive(const BigIndex& n,
                                           RecursionMemo& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  SeqValue result;
  if (n <= 1) {
    result = 0;
  } else {
    BigIndex k = n >> 1;
    SeqValue k2 = k * k;
    if ((n & 1) == 0) {
      result = 3 * and_pairs_recursive(k, memo) + k2;
    } else {
      result = and_pairs_recursive(k, memo) +
               2 * and_pairs_recursive(k + 1, memo) + k2 - 1;
    }
  }
  return memo.emplace(n, std::move(result)).first->second;
}

inline SeqValue and_pairs_recursive(const BigIndex& n) {
  RecursionMemo memo;
  return and_pairs_recursive(n, memo);
}

// Counts of the pairs of S_n classified by (parity of i, parity of j).
struct ParitySplit {
  SeqValue ee, eo, oe, oo;

  SeqValue total() const { return ee + eo + oe + oo; }
  bool operator==(const ParitySplit&) const = default;
};

// Classify every pair of S_n by coordinate parity. Oracle path; O(n^2).
inline ParitySplit parity_split(Index n, Index guard = kBruteForceGuard) {
  check_guard(n, guard, "brute-force");
  std::array<std::uint64_t, 4> counts{};  // [i parity][j parity]
  for (Index i = 1; i < n; ++i) {
    for (Index j = 1; j < n; ++j) {
      if ((i & j) != 0) ++counts[(i & 1) * 2 + (j & 1)];
    }
  }
  return ParitySplit{SeqValue(counts[0]), SeqValue(counts[1]),
                     SeqValue(counts[2]), SeqValue(counts[3])};
}

// Count pairs (i,j) with 0 <= i,j < n and i AND j == 0, walking the bits of
// n most-significant first with one "still tight against n" flag per
// coordinate. Complements the recursion: a_n + zero_and_pairs_digitdp(n) = n^2.
inline SeqValue zero_and_pairs_digitdp(const BigIndex& n) {
  if (n == 0) return 0;
  // state index: bit 0 = j tight, bit 1 = i tight
  std::array<SeqValue, 4> ways{};
  ways[3] = 1;
  for (int bit = static_cast<int>(bit_length(n)) - 1; bit >= 0; --bit) {
    unsigned nb = boost::multiprecision::bit_test(n, bit) ? 1 : 0;
    std::array<SeqValue, 4> next{};
    for (unsigned s = 0; s < 4; ++s) {
      if (ways[s] == 0) continue;
      bool ti = s & 2, tj = s & 1;
      // (x, y) with x AND y == 0
      for (auto [x, y] : {std::pair<unsigned, unsigned>{0, 0}, {0, 1}, {1, 0}}) {
        if (ti && x > nb) continue;
        if (tj && y > nb) continue;
        unsigned ns = ((ti && x == nb) ? 2u : 0u) | ((tj && y == nb) ? 1u : 0u);
        next[ns] += ways[s];
      }
    }
    ways = std::move(next);
  }
  // a coordinate still tight at the end equals n itself, which is excluded
  return ways[0];
}

}  // namespace seqcheck
