#pragma once
// Machine-readable reports and the command implementations behind the CLI.
//
// Every command produces a Report: a sorted list of named records, each with
// a status (pass / fail / flagged), a stable rule identifier, and a JSON
// detail payload, plus a fixed "conventions" block pinning the sign and
// normalization choices of the toolkit so results are reproducible without
// reading the source.  "flagged" marks noteworthy but non-failing outcomes
// (ambiguous closed-form conventions, skipped checks, non-stabilized spans);
// only "fail" makes a command's exit status nonzero.

#include <cstdint>
#include <string>
#include <vector>

#include "weylspin/exact_scalar.hpp"

#include "json.hpp"

namespace weylspin::report {

enum class Status { kPass, kFail, kFlagged };
std::string to_string(Status s);

struct Record {
  std::string name;
  Status status = Status::kPass;
  std::string rule;  // stable identifier of the decision rule
  nlohmann::json detail = nlohmann::json::object();
};

struct Report {
  std::string command;
  std::vector<Record> records;

  void add(Record r) { records.push_back(std::move(r)); }
  // Records are kept sorted by name so output is order-independent.
  void sort_records();
  bool all_pass() const;  // no kFail records
  unsigned count(Status s) const;
  nlohmann::json to_json() const;
  // One line per record plus a summary, for terminal output.
  std::string render_text() const;
};

// The toolkit's pinned conventions (compatibility sign, Hermitian form,
// odd-dimension component choice, spinor-count parity rule, ...).
nlohmann::json conventions();

struct CheckConfig {
  std::string structure_path;
  std::vector<std::string> suites;           // empty = run everything
  std::vector<Rational> basepoint_override;  // empty = keep the file's
  unsigned max_order = 4;                    // holonomy derivative cap
};

struct SelftestConfig {
  unsigned max_signature = 8;   // cap on r + s (and on n + 2 for frames)
  std::uint64_t seed = 1;       // randomized property suites are seeded
  unsigned bivector_pairs = 10; // per signature
  unsigned random_instances = 10;
};

// Catalog table: one record per variant whose name or family matches the
// filter (empty filter = all), with computed vs closed-form spinor counts.
// Throws std::invalid_argument when a nonempty filter matches nothing.
Report cmd_catalog(const std::string& filter, unsigned max_n = 6);

// Structure verification: loads the file and runs the compatibility,
// recurrence, projection, Ricci, Einstein-Weyl, holonomy and spinor checks
// (restricted to config.suites when nonempty).  Propagates input errors
// (missing file, parse errors, poles at the basepoint) as exceptions.
Report cmd_check(const CheckConfig& config);

// Cross-module invariant suites: Clifford relations, the bivector
// homomorphism, split-frame identities, the catalog dimension table, and
// closed-form agreement on random structures.
Report cmd_selftest(const SelftestConfig& config);

}  // namespace weylspin::report
