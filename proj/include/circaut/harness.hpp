#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "circaut/circulant.hpp"
#include "circaut/solver.hpp"

namespace circaut {

enum class Connectivity { Connected, Disconnected, All };
enum class Enumerator { Backtracking, Oracle, Both };

struct SweepSpec {
  int n_min = 3;
  int n_max = 8;
  std::vector<Mode> modes{Mode::Directed};
  Connectivity connectivity = Connectivity::All;
  std::vector<PartitionKind> kinds{PartitionKind::C};
  Enumerator enumerator = Enumerator::Backtracking;
  int jobs = 1;
  std::optional<std::size_t> max_solutions = 1'000'000;
  int oracle_limit = 9;
  /// Per-instance wall time in the report; off by default so reports are
  /// byte-stable.
  bool record_timing = false;
};

/// Throws InvalidInput for an inconsistent spec (oracle beyond its limit,
/// empty mode/kind lists, jobs < 1).
void validate(const SweepSpec& spec);

enum class Verdict { Match, ExpectedMismatch, Mismatch, Error };

std::string to_string(Verdict verdict);
Verdict verdict_from_string(const std::string& text);

struct KindResult {
  PartitionKind kind = PartitionKind::C;
  std::size_t parts = 0;
  std::size_t respecting = 0;
  Verdict verdict = Verdict::Match;
  std::optional<bool> oracle_agrees;  // set when both enumerators ran

  bool operator==(const KindResult&) const = default;
};

struct InstanceResult {
  Residue n = 0;
  std::vector<Residue> set;
  Mode mode = Mode::Directed;
  bool connected = false;
  std::size_t parts_b = 0;
  std::size_t parts_c = 0;
  std::vector<KindResult> kinds;
  std::size_t multipliers = 0;
  Verdict verdict = Verdict::Match;  // worst over kinds
  bool prop_covered = false;
  int prop_rounds = 0;
  bool prop_invariant = true;
  std::size_t audit_failures = 0;
  std::string error;  // resource or other per-instance error
  std::optional<double> ms;

  const KindResult* kind(PartitionKind k) const;
  bool operator==(const InstanceResult&) const = default;
};

struct Aggregates {
  std::size_t instances = 0;
  std::size_t connected = 0;
  std::size_t matches = 0;
  std::size_t expected_mismatches = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::size_t oracle_discrepancies = 0;
  std::size_t audit_failures = 0;

  bool operator==(const Aggregates&) const = default;
};

struct VerificationReport {
  SweepSpec spec;
  std::vector<InstanceResult> instances;
  Aggregates aggregates;
  std::vector<std::string> failures;
};

Aggregates compute_aggregates(const std::vector<InstanceResult>& instances);

/// Every connection set for each n in range and each requested mode
/// (all nonempty subsets of {1..n-1} when directed, inverse-closed ones
/// when undirected), filtered by connectivity. Ordered by n, then mode
/// (directed first), then the sorted element list lexicographically.
std::vector<ConnectionSet> generate_instances(const SweepSpec& spec);

/// Runs every check on one instance. Resource errors are captured in
/// `error`, never thrown.
InstanceResult verify_instance(const ConnectionSet& cs, const SweepSpec& spec);

/// Sweep over generate_instances(spec) on spec.jobs workers. The report is
/// ordered by instance, independent of the worker count.
VerificationReport verify_theorem(const SweepSpec& spec);

/// 0 clean, 1 theorem mismatch / oracle or audit failure, 3 resource cap hit.
int exit_code(const VerificationReport& report);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& json);

std::string to_json_text(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

enum class ReportFormat { Json, Csv };

/// Throws std::runtime_error when the destination cannot be written.
void export_report(const VerificationReport& report, ReportFormat format,
                   const std::string& path);

}  // namespace circaut
