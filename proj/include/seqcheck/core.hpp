#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqcheck {

// Exact nonnegative counts; every sequence term in the library is one of these.
using SeqValue = boost::multiprecision::cpp_int;

// Index for single-term evaluators that accept arbitrarily large n.
using BigIndex = boost::multiprecision::cpp_int;

// Index for table positions.
using Index = std::uint64_t;

// Default guards for the quadratic/oracle paths. All are overridable per call.
inline constexpr Index kBruteForceGuard = 8192;
inline constexpr Index kPartitionOracleGuard = 4096;
inline constexpr Index kDefinitionGuard = 4096;

// Thrown when an oracle-path argument exceeds its guard, or an index is
// out of a table's domain.
class guard_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Thrown when data violates a structural rule (non-contiguous b-file
// indices, an odd term where exact halving is required).
class integrity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown on malformed input text; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void check_guard(Index n, Index guard, const char* guard_name) {
  if (n > guard) {
    throw guard_error(std::string(guard_name) + " guard exceeded: n = " +
                      std::to_string(n) + " > " + std::to_string(guard));
  }
}

// Number of bits in n; bit_length(0) == 0.
inline unsigned bit_length(const BigIndex& n) {
  return n == 0 ? 0u : boost::multiprecision::msb(n) + 1u;
}

}  // namespace seqcheck
