#pragma once

// The max/min-split family: a_1 = 1 and a_n = M_n + m_n where M_n and m_n
// are the max and min of a_i + a_{n-i} over 1 <= i < n. Built twice: by the
// raw definition scan and by the closed forms through the binary-partition
// sequence b.

#include <utility>
#include <vector>

#include "seqcheck/binary_partitions.hpp"
#include "seqcheck/core.hpp"

namespace seqcheck {

// m_1 has no defining split; the closed-form sum over m_k needs a stand-in.
enum class M1Convention { zero, one, undefined };

inline const char* to_string(M1Convention c) {
  switch (c) {
    case M1Convention::zero: return "zero";
    case M1Convention::one: return "one";
    default: return "undefined";
  }
}

// Aligned a / M / m prefixes. a is defined from 1, M and m from 2.
class Conj115Table {
 public:
  Conj115Table(Index n_max, M1Convention convention)
      : n_max_(n_max),
        convention_(convention),
        a_(n_max + 1),
        big_m_(n_max + 1),
        small_m_(n_max + 1) {}

  Index n_max() const { return n_max_; }
  M1Convention m1_convention() const { return convention_; }

  const SeqValue& a(Index n) const {
    require(n >= 1 && n <= n_max_, "a", n);
    return a_[n];
  }
  const SeqValue& big_m(Index n) const {
    require(n >= 2 && n <= n_max_, "M", n);
    return big_m_[n];
  }
  const SeqValue& small_m(Index n) const {
    require(n >= 2 && n <= n_max_, "m", n);
    return small_m_[n];
  }

  SeqValue& a_slot(Index n) { return a_[n]; }
  SeqValue& big_m_slot(Index n) { return big_m_[n]; }
  SeqValue& small_m_slot(Index n) { return small_m_[n]; }

 private:
  static void require(bool ok, const char* name, Index n) {
    if (!ok) {
      throw guard_error(std::string(name) + "[" + std::to_string(n) +
                        "] is outside the table domain");
    }
  }

  Index n_max_;
  M1Convention convention_;
  std::vector<SeqValue> a_, big_m_, small_m_;
};

// Definition scan: for each n, min and max of a_i + a_{n-i} over all splits.
// O(n_max^2) big-integer additions. M and m are left absent at n = 1 (the
// split set is empty there), recorded as convention = undefined.
inline Conj115Table conj115_definition_table(Index n_max,
                                             Index guard = kDefinitionGuard) {
  if (n_max < 1) throw guard_error("conj115 table needs n_max >= 1");
  check_guard(n_max, guard, "definition-scan");
  Conj115Table table(n_max, M1Convention::undefined);
  table.a_slot(1) = 1;
  for (Index n = 2; n <= n_max; ++n) {
    SeqValue lo = table.a(1) + table.a(n - 1);
    SeqValue hi = lo;
    for (Index i = 2; 2 * i <= n; ++i) {
      SeqValue s = table.a(i) + table.a(n - i);
      if (s < lo) lo = s;
      if (s > hi) hi = s;
    }
    table.a_slot(n) = lo + hi;
    table.small_m_slot(n) = std::move(lo);
    table.big_m_slot(n) = std::move(hi);
  }
  return table;
}

// Closed forms: m_n = (3/2) b_{n-1} - 1, M_n = n + sum_{k<n} m_k,
// a_n = M_{n+1} - 1. O(n_max) via a running prefix sum of m.
// The division by 2 is exact by construction; an odd b term is an
// integrity failure, not something to truncate.
inline Conj115Table conj115_closed_form_table(
    Index n_max, const BinPartTable& b,
    M1Convention convention = M1Convention::zero) {
  if (n_max < 1) throw guard_error("conj115 table needs n_max >= 1");
  if (convention == M1Convention::undefined) {
    throw guard_error("closed-form table needs a concrete m1 convention");
  }
  if (b.n_max < n_max) {
    throw guard_error("b table covers only up to " + std::to_string(b.n_max) +
                      ", need " + std::to_string(n_max));
  }
  auto small_m_at = [&](Index n) {
    const SeqValue& bn1 = b.terms[n - 1];
    if (bn1 % 2 != 0) {
      throw integrity_error("b_" + std::to_string(n - 1) + " = " +
                            bn1.str() + " is odd; (3/2) b is not an integer");
    }
    return 3 * (bn1 / 2) - 1;
  };

  Conj115Table table(n_max, convention);
  SeqValue m_prefix = convention == M1Convention::one ? 1 : 0;  // sum_{k<=n} m_k
  for (Index n = 2; n <= n_max; ++n) {
    table.big_m_slot(n) = n + m_prefix;
    table.small_m_slot(n) = small_m_at(n);
    m_prefix += table.small_m(n);
  }
  // a_n = M_{n+1} - 1; the slot for M_{n_max + 1} is derived on the fly.
  for (Index n = 1; n < n_max; ++n) {
    table.a_slot(n) = table.big_m(n + 1) - 1;
  }
  table.a_slot(n_max) = n_max + m_prefix;  // (n_max + 1) + sum - 1
  return table;
}

// Identity m_n = a_{floor(n/2)} + a_{ceil(n/2)}.
inline SeqValue m_via_prop4(const Conj115Table& table, Index n) {
  if (n < 2 || n > table.n_max()) {
    throw guard_error("m_via_prop4: n = " + std::to_string(n) +
                      " outside [2, n_max]");
  }
  return table.a(n / 2) + table.a((n + 1) / 2);
}

// Identity M_{n+1} = a_n + 1, read as M_n = a_{n-1} + 1.
inline SeqValue big_m_via_prop2(const Conj115Table& table, Index n) {
  if (n < 2 || n > table.n_max() + 1) {
    throw guard_error("big_m_via_prop2: n = " + std::to_string(n) +
                      " outside [2, n_max + 1]");
  }
  return table.a(n - 1) + 1;
}

}  // namespace seqcheck
