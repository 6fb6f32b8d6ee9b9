#pragma once

// Numerical verification of every identity the two conjectures rest on,
// each one comparing two independently computed sides over a finite range.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqcheck/and_pairs.hpp"
#include "seqcheck/binary_partitions.hpp"
#include "seqcheck/maxmin_seq.hpp"

namespace seqcheck {

enum class IdentityId {
  C110_EVEN,
  C110_ODD,
  C110_COMPLEMENT,
  C110_PARITY_SPLIT,
  C115_DEF_VS_CLOSED,
  C115_PROP1,
  C115_PROP2,
  C115_PROP4,
  C115_COR3,
  C115_EQ1,
  B_ORACLE_VS_REC,
  B_EVEN,
  OEIS_CROSSCHECK,
};

inline const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::C110_EVEN: return "C110_EVEN";
    case IdentityId::C110_ODD: return "C110_ODD";
    case IdentityId::C110_COMPLEMENT: return "C110_COMPLEMENT";
    case IdentityId::C110_PARITY_SPLIT: return "C110_PARITY_SPLIT";
    case IdentityId::C115_DEF_VS_CLOSED: return "C115_DEF_VS_CLOSED";
    case IdentityId::C115_PROP1: return "C115_PROP1";
    case IdentityId::C115_PROP2: return "C115_PROP2";
    case IdentityId::C115_PROP4: return "C115_PROP4";
    case IdentityId::C115_COR3: return "C115_COR3";
    case IdentityId::C115_EQ1: return "C115_EQ1";
    case IdentityId::B_ORACLE_VS_REC: return "B_ORACLE_VS_REC";
    case IdentityId::B_EVEN: return "B_EVEN";
    case IdentityId::OEIS_CROSSCHECK: return "OEIS_CROSSCHECK";
  }
  return "?";
}

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct Counterexample {
  BigIndex index;
  SeqValue expected;
  SeqValue actual;
};

struct IdentityReport {
  IdentityId identity;
  BigIndex range_lo = 0, range_hi = 0;  // inclusive; meaningless when skipped
  CheckStatus status = CheckStatus::skipped;
  std::optional<Counterexample> first_failure;
  double elapsed_ms = 0.0;
};

namespace detail {

// Runs one identity over [lo, hi], stopping at the first counterexample.
// The body returns nullopt on success at index n, or (expected, actual).
inline IdentityReport run_check(
    IdentityId id, const BigIndex& lo, const BigIndex& hi,
    const std::function<std::optional<std::pair<SeqValue, SeqValue>>(
        const BigIndex&)>& body) {
  IdentityReport report;
  report.identity = id;
  report.range_lo = lo;
  report.range_hi = hi;
  if (lo > hi) {
    report.status = CheckStatus::skipped;
    return report;
  }
  auto t0 = std::chrono::steady_clock::now();
  report.status = CheckStatus::pass;
  for (BigIndex n = lo; n <= hi; ++n) {
    if (auto bad = body(n)) {
      report.status = CheckStatus::fail;
      report.first_failure =
          Counterexample{n, std::move(bad->first), std::move(bad->second)};
      break;
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

inline std::optional<std::pair<SeqValue, SeqValue>> mismatch(
    const SeqValue& expected, const SeqValue& actual) {
  if (expected == actual) return std::nullopt;
  return std::make_pair(expected, actual);
}

}  // namespace detail

// Fast-path evaluator for a_n; injectable so tests can verify that a broken
// evaluator is caught.
using AndPairsEvaluator = std::function<SeqValue(const BigIndex&)>;

// Checks C110_EVEN, C110_ODD, C110_COMPLEMENT and C110_PARITY_SPLIT with
// brute-forced left sides for all applicable indices up to n_max. The odd
// recursion and the odd split formulas start at sequence index 3: at index 1
// their derivation divides by two before the pair (n, n) exists.
inline std::vector<IdentityReport> verify_conjecture_110(
    Index n_max, AndPairsEvaluator fast = {}, Index guard = kBruteForceGuard) {
  check_guard(n_max, guard, "brute-force");
  if (!fast) fast = [](const BigIndex& n) { return and_pairs_recursive(n); };

  // One brute-force table shared by every check.
  std::vector<SeqValue> brute(n_max + 1);
  for (Index n = 0; n <= n_max; ++n) brute[n] = and_pairs_bruteforce(n, guard);
  auto at = [&](const BigIndex& n) {
    return brute[static_cast<Index>(n)];
  };

  std::vector<IdentityReport> reports;

  // a_{2n} = 3 a_n + n^2, checked against brute force at 2n.
  {
    auto r = detail::run_check(
        IdentityId::C110_EVEN, 0, BigIndex(n_max / 2),
        [&](const BigIndex& n) {
          return detail::mismatch(at(2 * n), 3 * fast(n) + n * n);
        });
    // Report failures at the sequence index, not the half-index.
    if (r.first_failure) {
      r.first_failure->index *= 2;
      r.first_failure->expected = at(r.first_failure->index);
    }
    reports.push_back(std::move(r));
  }

  // a_{2n+1} = a_n + 2 a_{n+1} + n^2 - 1 for n >= 1.
  {
    auto r = detail::run_check(
        IdentityId::C110_ODD, 1,
        n_max >= 3 ? BigIndex((n_max - 1) / 2) : BigIndex(0),
        [&](const BigIndex& n) {
          return detail::mismatch(at(2 * n + 1),
                                  fast(n) + 2 * fast(n + 1) + n * n - 1);
        });
    if (r.first_failure) {
      r.first_failure->index = 2 * r.first_failure->index + 1;
      r.first_failure->expected = at(r.first_failure->index);
    }
    reports.push_back(std::move(r));
  }

  // a_n + |{(i,j) < n : i AND j = 0}| = n^2.
  reports.push_back(detail::run_check(
      IdentityId::C110_COMPLEMENT, 0, BigIndex(n_max),
      [&](const BigIndex& n) {
        return detail::mismatch(n * n - zero_and_pairs_digitdp(n), fast(n));
      }));

  // Parity-class counts against the closed class formulas.
  reports.push_back(detail::run_check(
      IdentityId::C110_PARITY_SPLIT, 0, BigIndex(n_max),
      [&](const BigIndex& big_n) -> std::optional<std::pair<SeqValue, SeqValue>> {
        Index n = static_cast<Index>(big_n);
        ParitySplit split = parity_split(n, guard);
        if (auto bad = detail::mismatch(brute[n], split.total())) return bad;
        if (auto bad = detail::mismatch(split.oe, split.eo)) return bad;
        Index k = n / 2;
        if (auto bad = detail::mismatch(SeqValue(k) * k, split.oo)) return bad;
        if (n % 2 == 0) {
          if (auto bad = detail::mismatch(brute[k], split.ee)) return bad;
          if (auto bad = detail::mismatch(brute[k], split.oe)) return bad;
        } else if (n >= 3) {
          if (auto bad = detail::mismatch(brute[k + 1], split.ee)) return bad;
          if (auto bad = detail::mismatch((brute[k + 1] + brute[k] - 1) / 2,
                                          split.oe)) {
            return bad;
          }
        }
        return std::nullopt;
      }));

  return reports;
}

struct Conjecture115Options {
  Index definition_guard = kDefinitionGuard;
  Index oracle_guard = kPartitionOracleGuard;
  Index eq1_cap = 256;  // Eq. (1) is quadratic per n
};

// Checks the max/min-split family: definition vs closed forms, Props 1/2/4,
// Cor 3, Eq. (1), and the b-sequence checks they lean on. The m1 convention
// feeds both the closed-form table and the Cor 3 sum.
inline std::vector<IdentityReport> verify_conjecture_115(
    Index n_max, M1Convention m1 = M1Convention::zero,
    const Conjecture115Options& options = {}) {
  if (n_max < 1) throw guard_error("verify_conjecture_115 needs n_max >= 1");
  check_guard(n_max, options.definition_guard, "definition-scan");

  if (n_max < 2) {
    // No splits exist below n = 2; every identity range is empty.
    std::vector<IdentityReport> skipped;
    for (IdentityId id :
         {IdentityId::C115_DEF_VS_CLOSED, IdentityId::C115_PROP1,
          IdentityId::C115_PROP2, IdentityId::C115_PROP4, IdentityId::C115_COR3,
          IdentityId::C115_EQ1, IdentityId::B_ORACLE_VS_REC,
          IdentityId::B_EVEN}) {
      IdentityReport r;
      r.identity = id;
      r.status = CheckStatus::skipped;
      skipped.push_back(std::move(r));
    }
    return skipped;
  }

  Conj115Table def = conj115_definition_table(n_max, options.definition_guard);
  BinPartTable b = b_table_recursive(n_max);
  Conj115Table closed = conj115_closed_form_table(n_max, b, m1);

  // Prefix sums of the definition-table m, for Cor 3 and Eq. (1).
  // m_sum[n] = m_2 + ... + m_n.
  std::vector<SeqValue> m_sum(n_max + 1);
  for (Index n = 2; n <= n_max; ++n) m_sum[n] = m_sum[n - 1] + def.small_m(n);
  SeqValue m1_term = m1 == M1Convention::one ? 1 : 0;

  std::vector<IdentityReport> reports;
  auto idx = [](const BigIndex& n) { return static_cast<Index>(n); };

  reports.push_back(detail::run_check(
      IdentityId::C115_DEF_VS_CLOSED, 1, BigIndex(n_max),
      [&](const BigIndex& big_n) -> std::optional<std::pair<SeqValue, SeqValue>> {
        Index n = idx(big_n);
        if (auto bad = detail::mismatch(def.a(n), closed.a(n))) return bad;
        if (n >= 2) {
          if (auto bad = detail::mismatch(def.big_m(n), closed.big_m(n)))
            return bad;
          if (auto bad = detail::mismatch(def.small_m(n), closed.small_m(n)))
            return bad;
        }
        return std::nullopt;
      }));

  reports.push_back(detail::run_check(
      IdentityId::C115_PROP1, 2, BigIndex(n_max),
      [&](const BigIndex& big_n) -> std::optional<std::pair<SeqValue, SeqValue>> {
        Index n = idx(big_n);
        if (def.a(n) <= def.a(n - 1)) {
          return std::make_pair(def.a(n - 1) + 1, def.a(n));
        }
        if (n >= 3) {
          if (def.big_m(n) <= def.big_m(n - 1)) {
            return std::make_pair(def.big_m(n - 1) + 1, def.big_m(n));
          }
          if (def.small_m(n) <= def.small_m(n - 1)) {
            return std::make_pair(def.small_m(n - 1) + 1, def.small_m(n));
          }
        }
        return std::nullopt;
      }));

  reports.push_back(detail::run_check(
      IdentityId::C115_PROP2, 2, BigIndex(n_max),
      [&](const BigIndex& big_n) {
        Index n = idx(big_n);
        return detail::mismatch(def.big_m(n), big_m_via_prop2(def, n));
      }));

  reports.push_back(detail::run_check(
      IdentityId::C115_PROP4, 2, BigIndex(n_max),
      [&](const BigIndex& big_n) {
        Index n = idx(big_n);
        return detail::mismatch(def.small_m(n), m_via_prop4(def, n));
      }));

  // M_n = n + sum_{k<n} m_k. Starts at n = 3: the n = 2 instance reduces to
  // M_2 = 2 + m_1 and only probes the convention, which Prop 2 already pins.
  reports.push_back(detail::run_check(
      IdentityId::C115_COR3, 3, BigIndex(n_max),
      [&](const BigIndex& big_n) {
        Index n = idx(big_n);
        return detail::mismatch(def.big_m(n), n + m1_term + m_sum[n - 1]);
      }));

  // a_n + 1 = a_i + sum_{j=i+1..n} m_j + (n - i + 1) for every split i.
  reports.push_back(detail::run_check(
      IdentityId::C115_EQ1, 2, BigIndex(std::min(n_max, options.eq1_cap)),
      [&](const BigIndex& big_n) -> std::optional<std::pair<SeqValue, SeqValue>> {
        Index n = idx(big_n);
        for (Index i = 1; i < n; ++i) {
          SeqValue rhs = def.a(i) + (m_sum[n] - m_sum[i]) + (n - i + 1);
          if (auto bad = detail::mismatch(def.a(n) + 1, rhs)) return bad;
        }
        return std::nullopt;
      }));

  {
    Index oracle_max = std::min(n_max, options.oracle_guard);
    BinPartTable oracle = binary_partition_oracle_prefix(oracle_max);
    reports.push_back(detail::run_check(
        IdentityId::B_ORACLE_VS_REC, 0, BigIndex(oracle_max),
        [&](const BigIndex& big_n) {
          Index n = idx(big_n);
          return detail::mismatch(oracle.terms[n], b.terms[n]);
        }));
  }

  reports.push_back(detail::run_check(
      IdentityId::B_EVEN, 1, BigIndex(n_max),
      [&](const BigIndex& big_n) -> std::optional<std::pair<SeqValue, SeqValue>> {
        Index n = idx(big_n);
        if (b.terms[n] % 2 != 0) {
          return std::make_pair(b.terms[n] + 1, b.terms[n]);
        }
        return std::nullopt;
      }));

  return reports;
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) return false;
  }
  return true;
}

}  // namespace seqcheck
