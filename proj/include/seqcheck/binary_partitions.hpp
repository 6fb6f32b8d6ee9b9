#pragma once

// b_n = number of partitions of 2n into powers of 2, by an unbounded-parts
// DP oracle and by the recurrence b_n = b_{n-1} + b_{floor(n/2)}, b_1 = 2.

#include <vector>

#include "seqcheck/core.hpp"

namespace seqcheck {

// Prefix of the binary-partition sequence; terms[0] = 1 (empty partition).
struct BinPartTable {
  std::vector<SeqValue> terms;  // terms[n] = b_n, 0 <= n <= n_max
  Index n_max = 0;
};

// DP oracle for the whole prefix b_0..b_n_max in one pass: classic
// unbounded-knapsack order, powers outermost so each multiset is counted once.
inline BinPartTable binary_partition_oracle_prefix(
    Index n_max, Index guard = kPartitionOracleGuard) {
  check_guard(n_max, guard, "partition-oracle");
  Index target = 2 * n_max;
  std::vector<SeqValue> dp(target + 1);
  dp[0] = 1;
  for (Index p = 1; p <= target; p *= 2) {
    for (Index t = p; t <= target; ++t) dp[t] += dp[t - p];
    if (p > target / 2) break;
  }
  BinPartTable table;
  table.n_max = n_max;
  table.terms.reserve(n_max + 1);
  for (Index n = 0; n <= n_max; ++n) table.terms.push_back(dp[2 * n]);
  return table;
}

// Count multisets of powers of 2 summing to 2n.
inline SeqValue binary_partition_oracle(Index n,
                                        Index guard = kPartitionOracleGuard) {
  return binary_partition_oracle_prefix(n, guard).terms[n];
}

// Fill terms[1..n_max] by the recurrence seeded with b_1 = 2; terms[0] = 1
// is stored but never read by the recurrence (floor(n/2) >= 1 for n >= 2).
inline BinPartTable b_table_recursive(Index n_max) {
  if (n_max < 1) {
    throw guard_error("b_table_recursive needs n_max >= 1 (seed is b_1 = 2)");
  }
  BinPartTable table;
  table.n_max = n_max;
  table.terms.resize(n_max + 1);
  table.terms[0] = 1;
  table.terms[1] = 2;
  for (Index n = 2; n <= n_max; ++n) {
    table.terms[n] = table.terms[n - 1] + table.terms[n / 2];
  }
  return table;
}

}  // namespace seqcheck
