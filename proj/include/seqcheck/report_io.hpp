#pragma once

// Serialized report format consumed by the CLI: one record per identity,
// as a JSON object per line or a TSV row. Values travel as decimal strings.

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>

#include "seqcheck/verifier.hpp"

namespace seqcheck {

inline nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json j{
      {"identity", to_string(report.identity)},
      {"status", to_string(report.status)},
      {"elapsed_ms", report.elapsed_ms},
  };
  if (report.status != CheckStatus::skipped) {
    j["range"] = {{"lo", report.range_lo.str()}, {"hi", report.range_hi.str()}};
  }
  if (report.first_failure) {
    j["first_failure"] = {
        {"index", report.first_failure->index.str()},
        {"expected", report.first_failure->expected.str()},
        {"actual", report.first_failure->actual.str()},
    };
  }
  return j;
}

inline void write_reports_json(std::ostream& os,
                               std::span<const IdentityReport> reports) {
  for (const auto& r : reports) os << to_json(r).dump() << '\n';
}

inline void write_reports_tsv(std::ostream& os,
                              std::span<const IdentityReport> reports) {
  os << "identity\tstatus\trange_lo\trange_hi\t"
        "failure_index\texpected\tactual\telapsed_ms\n";
  for (const auto& r : reports) {
    os << to_string(r.identity) << '\t' << to_string(r.status) << '\t';
    if (r.status == CheckStatus::skipped) {
      os << "-\t-\t";
    } else {
      os << r.range_lo.str() << '\t' << r.range_hi.str() << '\t';
    }
    if (r.first_failure) {
      os << r.first_failure->index.str() << '\t'
         << r.first_failure->expected.str() << '\t'
         << r.first_failure->actual.str() << '\t';
    } else {
      os << "-\t-\t-\t";
    }
    os << r.elapsed_ms << '\n';
  }
}

}  // namespace seqcheck
