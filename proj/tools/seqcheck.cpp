// Command-line front end: compute sequence terms, verify the conjecture
// identity suites, cross-check against OEIS b-files, and benchmark the
// oracle vs fast paths.
//
// Exit codes: 0 success, 2 verification/crosscheck failure, 1 usage or
// I/O error. The environment variable SEQCHECK_GUARD (decimal) overrides
// every oracle guard.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seqcheck/and_pairs.hpp"
#include "seqcheck/binary_partitions.hpp"
#include "seqcheck/maxmin_seq.hpp"
#include "seqcheck/oeis.hpp"
#include "seqcheck/report_io.hpp"
#include "seqcheck/verifier.hpp"

namespace {

using namespace seqcheck;

struct Guards {
  Index brute = kBruteForceGuard;
  Index oracle = kPartitionOracleGuard;
  Index definition = kDefinitionGuard;
};

Guards guards_from_env() {
  Guards g;
  if (const char* env = std::getenv("SEQCHECK_GUARD")) {
    Index v = std::stoull(env);
    g.brute = g.oracle = g.definition = v;
  }
  return g;
}

struct OutputRecord {
  std::string seq;
  std::string index;
  std::string value;
  std::string method;
};

void emit_records(const std::vector<OutputRecord>& records,
                  const std::string& format) {
  if (format == "json") {
    for (const auto& r : records) {
      nlohmann::json j{{"seq", r.seq},
                       {"index", r.index},
                       {"value", r.value},
                       {"method", r.method}};
      std::cout << j.dump() << '\n';
    }
  } else {
    std::cout << "seq\tindex\tvalue\tmethod\n";
    for (const auto& r : records) {
      std::cout << r.seq << '\t' << r.index << '\t' << r.value << '\t'
                << r.method << '\n';
    }
  }
}

// First index at which the sequence is defined.
Index first_index(const std::string& seq) {
  if (seq == "conj115-a") return 1;
  if (seq == "conj115-m" || seq == "conj115-M") return 2;
  return 0;
}

// Direct O(n^2) count of zero-AND pairs below n; oracle partner of the
// digit DP.
SeqValue zero_and_pairs_bruteforce(Index n, Index guard) {
  check_guard(n, guard, "brute-force");
  std::uint64_t count = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if ((i & j) == 0) ++count;
    }
  }
  return SeqValue(count);
}

// Evaluate one machine-range table-backed term.
SeqValue table_term(const std::string& seq, bool oracle, Index n,
                    const Guards& guards) {
  if (seq == "binpart") {
    if (oracle) return binary_partition_oracle(n, guards.oracle);
    return n == 0 ? SeqValue(1) : b_table_recursive(n).terms[n];
  }
  Index n_max = std::max<Index>(n, 1);
  if (oracle) {
    Conj115Table t = conj115_definition_table(n_max, guards.definition);
    if (seq == "conj115-a") return t.a(n);
    if (seq == "conj115-m") return t.small_m(n);
    return t.big_m(n);
  }
  Conj115Table t = conj115_closed_form_table(n_max, b_table_recursive(n_max));
  if (seq == "conj115-a") return t.a(n);
  if (seq == "conj115-m") return t.small_m(n);
  return t.big_m(n);
}

SeqValue compute_term(const std::string& seq, bool oracle, const BigIndex& n,
                      const Guards& guards) {
  if (seq == "and-pairs") {
    if (oracle) return and_pairs_bruteforce(static_cast<Index>(n), guards.brute);
    return and_pairs_recursive(n);
  }
  if (seq == "and-pairs-zero") {
    if (oracle) return zero_and_pairs_bruteforce(static_cast<Index>(n), guards.brute);
    return zero_and_pairs_digitdp(n);
  }
  return table_term(seq, oracle, static_cast<Index>(n), guards);
}

bool fits_machine_index(const BigIndex& n) {
  return n >= 0 && bit_length(n) <= 63;
}

int cmd_compute(const std::string& seq, const std::string& n_arg,
                const std::string& range_arg, const std::string& method,
                const std::string& format, const Guards& guards) {
  bool oracle = method == "oracle";
  BigIndex lo, hi;
  if (!range_arg.empty()) {
    auto sep = range_arg.find("..");
    if (sep == std::string::npos) {
      std::cerr << "error: --range must look like A..B\n";
      return 1;
    }
    lo = BigIndex(range_arg.substr(0, sep));
    hi = BigIndex(range_arg.substr(sep + 2));
  } else {
    lo = hi = BigIndex(n_arg);
  }
  if (lo < first_index(seq)) {
    std::cerr << "error: " << seq << " starts at index " << first_index(seq)
              << "\n";
    return 1;
  }

  bool big_n_ok = !oracle && (seq == "and-pairs" || seq == "and-pairs-zero");
  if (!big_n_ok && !fits_machine_index(hi)) {
    std::cerr << "error: index too large for this sequence/method\n";
    return 1;
  }

  std::vector<OutputRecord> records;
  std::string method_name = oracle ? "oracle" : "fast";

  // Table-backed sequences share one table across the whole range.
  if (seq == "conj115-a" || seq == "conj115-m" || seq == "conj115-M" ||
      (seq == "binpart" && !oracle)) {
    Index n_max = std::max<Index>(static_cast<Index>(hi), 1);
    std::optional<Conj115Table> t;
    std::optional<BinPartTable> b;
    if (seq == "binpart") {
      b = b_table_recursive(n_max);
    } else if (oracle) {
      t = conj115_definition_table(n_max, guards.definition);
    } else {
      t = conj115_closed_form_table(n_max, b_table_recursive(n_max));
    }
    for (Index n = static_cast<Index>(lo); n <= static_cast<Index>(hi); ++n) {
      SeqValue v;
      if (seq == "binpart") v = b->terms[n];
      else if (seq == "conj115-a") v = t->a(n);
      else if (seq == "conj115-m") v = t->small_m(n);
      else v = t->big_m(n);
      records.push_back({seq, std::to_string(n), v.str(), method_name});
    }
  } else {
    for (BigIndex n = lo; n <= hi; ++n) {
      records.push_back(
          {seq, n.str(), compute_term(seq, oracle, n, guards).str(),
           method_name});
    }
  }
  emit_records(records, format);
  return 0;
}

int cmd_verify(int conjecture, Index n_max, const std::string& m1,
               const std::string& format, const Guards& guards) {
  std::vector<IdentityReport> reports;
  if (conjecture == 110) {
    reports = verify_conjecture_110(n_max, {}, guards.brute);
  } else {
    Conjecture115Options options;
    options.definition_guard = guards.definition;
    options.oracle_guard = guards.oracle;
    reports = verify_conjecture_115(
        n_max, m1 == "one" ? M1Convention::one : M1Convention::zero, options);
  }
  if (format == "json") {
    write_reports_json(std::cout, reports);
  } else {
    write_reports_tsv(std::cout, reports);
  }
  return all_pass(reports) ? 0 : 2;
}

int cmd_crosscheck(const std::string& bfile, const std::string& seq,
                   Index offset, Index n_max, const std::string& format,
                   const Guards& guards) {
  std::ifstream in(bfile, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << bfile << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<BFileEntry> entries = parse_bfile(buf.str());

  if (offset < first_index(seq)) {
    std::cerr << "error: " << seq << " starts at index " << first_index(seq)
              << "\n";
    return 1;
  }
  std::vector<SeqValue> computed;
  for (Index n = offset; n <= n_max; ++n) {
    computed.push_back(compute_term(seq, /*oracle=*/false, n, guards));
  }

  IdentityReport report =
      crosscheck(entries, computed, static_cast<long long>(offset));
  std::vector<IdentityReport> reports{report};
  if (format == "json") {
    write_reports_json(std::cout, reports);
  } else {
    write_reports_tsv(std::cout, reports);
  }
  return report.status == CheckStatus::pass ? 0 : 2;
}

int cmd_bench(const std::string& seq, const std::string& n_arg, Index reps,
              const Guards& guards) {
  BigIndex n(n_arg);
  Index guard = seq == "and-pairs" || seq == "and-pairs-zero"
                    ? guards.brute
                    : (seq == "binpart" ? guards.oracle : guards.definition);
  bool oracle_feasible = fits_machine_index(n) && static_cast<Index>(n) <= guard;
  bool fast_big_ok = seq == "and-pairs" || seq == "and-pairs-zero";
  if (!fast_big_ok && !fits_machine_index(n)) {
    std::cerr << "error: index too large for " << seq << "\n";
    return 1;
  }

  auto time_method = [&](bool oracle) {
    SeqValue value;
    auto t0 = std::chrono::steady_clock::now();
    for (Index r = 0; r < reps; ++r) {
      value = compute_term(seq, oracle, n, guards);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return std::make_pair(value, ms);
  };

  auto [fast_value, fast_ms] = time_method(false);
  std::cout << "seq\tn\tmethod\treps\ttotal_ms\tstatus\n";
  if (oracle_feasible) {
    auto [oracle_value, oracle_ms] = time_method(true);
    if (oracle_value != fast_value) {
      std::cerr << "error: method disagreement at n = " << n << ": oracle = "
                << oracle_value << ", fast = " << fast_value << "\n";
      return 2;
    }
    std::cout << seq << '\t' << n << "\toracle\t" << reps << '\t' << oracle_ms
              << "\tok\n";
    std::cout << seq << '\t' << n << "\tfast\t" << reps << '\t' << fast_ms
              << "\tok\n";
  } else {
    std::cout << seq << '\t' << n << "\toracle\t" << reps << "\t-\tskipped\n";
    std::cout << seq << '\t' << n << "\tfast\t" << reps << '\t' << fast_ms
              << "\tunchecked\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-sequence toolkit: AND-pair counts, max/min-split "
               "sequences, binary partitions"};
  app.require_subcommand(1);

  const std::vector<std::string> seqs = {"and-pairs", "and-pairs-zero",
                                         "conj115-a", "conj115-m",
                                         "conj115-M", "binpart"};

  std::string seq, n_arg, range_arg, method = "fast", format = "tsv";
  std::string m1 = "zero", bfile;
  int conjecture = 110;
  Index n_max = 256, offset = 0, reps = 3;

  auto* compute = app.add_subcommand("compute", "Compute sequence terms");
  compute->add_option("--seq", seq, "Sequence name")
      ->required()
      ->check(CLI::IsMember(seqs));
  auto* n_opt = compute->add_option("--n", n_arg, "Single index (decimal)");
  auto* range_opt =
      compute->add_option("--range", range_arg, "Inclusive index range A..B");
  n_opt->excludes(range_opt);
  compute->add_option("--method", method, "oracle or fast")
      ->check(CLI::IsMember({"oracle", "fast"}));
  compute->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("--conjecture", conjecture, "110 or 115")
      ->required()
      ->check(CLI::IsMember({110, 115}));
  verify->add_option("--max", n_max, "Largest index checked");
  verify->add_option("--m1", m1, "m1 convention for conjecture 115")
      ->check(CLI::IsMember({"zero", "one"}));
  verify->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* cross = app.add_subcommand("crosscheck", "Compare against a b-file");
  cross->add_option("--bfile", bfile, "Path to OEIS b-file")->required();
  cross->add_option("--seq", seq, "Sequence name")
      ->required()
      ->check(CLI::IsMember(seqs));
  cross->add_option("--offset", offset, "Sequence index of the first computed term");
  cross->add_option("--max", n_max, "Largest index computed");
  cross->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* bench = app.add_subcommand("bench", "Time oracle vs fast paths");
  bench->add_option("--seq", seq, "Sequence name")
      ->required()
      ->check(CLI::IsMember(seqs));
  bench->add_option("--n", n_arg, "Index (decimal)")->required();
  bench->add_option("--reps", reps, "Repetitions")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Guards guards = guards_from_env();
    if (compute->parsed()) {
      if (n_arg.empty() && range_arg.empty()) {
        std::cerr << "error: compute needs --n or --range\n";
        return 1;
      }
      return cmd_compute(seq, n_arg, range_arg, method, format, guards);
    }
    if (verify->parsed()) {
      return cmd_verify(conjecture, n_max, m1, format, guards);
    }
    if (cross->parsed()) {
      return cmd_crosscheck(bfile, seq, offset, n_max, format, guards);
    }
    return cmd_bench(seq, n_arg, reps, guards);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
