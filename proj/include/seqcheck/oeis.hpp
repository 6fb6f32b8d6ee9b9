#pragma once

// OEIS b-file parsing and cross-checking of computed prefixes against
// reference data. Format: one "<index> <value>" pair per line, '#' comments,
// LF or CRLF line endings, indices contiguous.

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqcheck/core.hpp"
#include "seqcheck/verifier.hpp"

namespace seqcheck {

struct BFileEntry {
  long long index;
  SeqValue value;

  bool operator==(const BFileEntry&) const = default;
};

inline std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos || line[start] == '#') continue;

    std::size_t idx_end = line.find_first_of(" \t", start);
    if (idx_end == std::string_view::npos) {
      throw parse_error("expected \"<index> <value>\"", line_no);
    }
    std::size_t val_start = line.find_first_not_of(" \t", idx_end);
    if (val_start == std::string_view::npos) {
      throw parse_error("missing value", line_no);
    }
    std::size_t val_end = line.find_first_of(" \t", val_start);
    if (val_end == std::string_view::npos) val_end = line.size();
    if (line.find_first_not_of(" \t", val_end) != std::string_view::npos) {
      throw parse_error("trailing garbage after value", line_no);
    }

    BFileEntry entry;
    try {
      entry.index = std::stoll(std::string(line.substr(start, idx_end - start)));
      entry.value = SeqValue(std::string(line.substr(val_start, val_end - val_start)));
    } catch (const std::exception&) {
      throw parse_error("malformed number", line_no);
    }
    if (!entries.empty() && entry.index != entries.back().index + 1) {
      throw integrity_error("non-contiguous index " +
                            std::to_string(entry.index) + " after " +
                            std::to_string(entries.back().index) + " at line " +
                            std::to_string(line_no));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

inline std::string serialize_bfile(std::span<const BFileEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.str();
    out += '\n';
  }
  return out;
}

// Compare computed[i] (holding the term at sequence index offset + i)
// against the b-file entries over the overlap of the two index ranges.
inline IdentityReport crosscheck(std::span<const BFileEntry> entries,
                                 std::span<const SeqValue> computed,
                                 long long offset) {
  if (entries.empty()) throw guard_error("crosscheck: no b-file entries");
  if (computed.empty()) throw guard_error("crosscheck: no computed values");
  long long lo = std::max(entries.front().index, offset);
  long long hi = std::min(entries.back().index,
                          offset + static_cast<long long>(computed.size()) - 1);
  if (lo > hi) {
    throw guard_error("crosscheck: index ranges do not overlap");
  }
  return detail::run_check(
      IdentityId::OEIS_CROSSCHECK, lo, hi,
      [&](const BigIndex& big_n) {
        long long n = static_cast<long long>(big_n);
        const SeqValue& reference =
            entries[static_cast<std::size_t>(n - entries.front().index)].value;
        return detail::mismatch(reference,
                                computed[static_cast<std::size_t>(n - offset)]);
      });
}

}  // namespace seqcheck
