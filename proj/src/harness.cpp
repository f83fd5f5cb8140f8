#include "circaut/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "circaut/error.hpp"

namespace circaut {

void validate(const SweepSpec& spec) {
  if (spec.modes.empty()) throw InvalidInput("sweep needs at least one mode");
  if (spec.kinds.empty()) throw InvalidInput("sweep needs at least one partition kind");
  if (spec.jobs < 1) throw InvalidInput("jobs must be at least 1");
  if (spec.enumerator != Enumerator::Backtracking && spec.n_max > spec.oracle_limit &&
      spec.n_min <= spec.n_max) {
    throw InvalidInput("oracle requested for n up to " + std::to_string(spec.n_max) +
                       ", limit is " + std::to_string(spec.oracle_limit));
  }
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match: return "match";
    case Verdict::ExpectedMismatch: return "expected-mismatch";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Error: return "error";
  }
  return "error";
}

Verdict verdict_from_string(const std::string& text) {
  for (Verdict v : {Verdict::Match, Verdict::ExpectedMismatch, Verdict::Mismatch, Verdict::Error}) {
    if (to_string(v) == text) return v;
  }
  throw InvalidInput("unknown verdict '" + text + "'");
}

const KindResult* InstanceResult::kind(PartitionKind k) const {
  for (const auto& r : kinds) {
    if (r.kind == k) return &r;
  }
  return nullptr;
}

Aggregates compute_aggregates(const std::vector<InstanceResult>& instances) {
  Aggregates a;
  a.instances = instances.size();
  for (const auto& r : instances) {
    if (r.connected) ++a.connected;
    switch (r.verdict) {
      case Verdict::Match: ++a.matches; break;
      case Verdict::ExpectedMismatch: ++a.expected_mismatches; break;
      case Verdict::Mismatch: ++a.mismatches; break;
      case Verdict::Error: ++a.errors; break;
    }
    for (const auto& k : r.kinds) {
      if (k.oracle_agrees == false) ++a.oracle_discrepancies;
    }
    a.audit_failures += r.audit_failures;
  }
  return a;
}

namespace {

bool keep(Residue n, const std::vector<Residue>& set, Connectivity filter) {
  if (filter == Connectivity::All) return true;
  bool connected = gcd_with(n, set) == 1;
  return connected == (filter == Connectivity::Connected);
}

// gcd(n, S') for every subset S' of S; each value generates a distinct <S'>.
std::vector<Residue> subgroup_generators(Residue n, const std::vector<Residue>& S) {
  std::set<Residue> gens{n};
  for (Residue s : S) {
    std::set<Residue> next = gens;
    for (Residue g : gens) next.insert(gcd(g, s));
    gens = std::move(next);
  }
  return {gens.begin(), gens.end()};
}

std::size_t audit_automorphism(const CirculantGraph& graph, const Permutation& p,
                               const ArcPartition& partition_b,
                               const std::vector<Residue>& subgroups) {
  std::size_t failures = 0;
  for (Residue g : subgroups) {
    if (!coset_image_check(graph, p, {g})) ++failures;
  }
  if (!is_connected(graph)) return failures;

  if (!respects_unchecked(graph, p, partition_b)) ++failures;
  const auto outcome = normalize_to_multiplier(graph, p);
  if (!outcome.ok()) return failures + 1;
  const auto& w = *outcome.witness;
  if (multiplier_perm(w.n, w.combined) != p) ++failures;
  for (const auto& c : w.residues) {
    for (Residue s : graph.connection_set().elements()) {
      if (mod(p(static_cast<Vertex>(s)) - c.residue * s, c.modulus) != 0) ++failures;
    }
  }
  const Permutation normalized = compose(normalizing_multiplier(w), p);
  for (Residue s : graph.connection_set().elements()) {
    for (Residue x : cyclic_subgroup(w.n, s)) {
      if (normalized(static_cast<Vertex>(x)) != x) ++failures;
    }
  }
  return failures;
}

}  // namespace

std::vector<ConnectionSet> generate_instances(const SweepSpec& spec) {
  std::vector<ConnectionSet> out;
  for (int n = std::max(spec.n_min, 2); n <= spec.n_max; ++n) {
    for (Mode mode : {Mode::Directed, Mode::Undirected}) {
      if (std::find(spec.modes.begin(), spec.modes.end(), mode) == spec.modes.end()) continue;
      // directed: one bit per element; undirected: one bit per pair {s, n - s}
      std::vector<std::vector<Residue>> atoms;
      for (Residue s = 1; s < n; ++s) {
        if (mode == Mode::Directed) {
          atoms.push_back({s});
        } else if (s <= n - s) {
          atoms.push_back(s == n - s ? std::vector<Residue>{s} : std::vector<Residue>{s, n - s});
        }
      }
      std::vector<std::vector<Residue>> sets;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
        std::vector<Residue> set;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          if (mask >> i & 1) set.insert(set.end(), atoms[i].begin(), atoms[i].end());
        }
        std::sort(set.begin(), set.end());
        if (keep(n, set, spec.connectivity)) sets.push_back(std::move(set));
      }
      std::sort(sets.begin(), sets.end());
      for (auto& set : sets) out.emplace_back(n, std::move(set), mode);
    }
  }
  return out;
}

InstanceResult verify_instance(const ConnectionSet& cs, const SweepSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  InstanceResult r;
  r.n = cs.n();
  r.set = cs.elements();
  r.mode = cs.mode();
  try {
    const CirculantGraph graph(cs);
    r.connected = is_connected(graph);
    const ArcPartition part_b = partition_B(graph);
    const ArcPartition part_c = partition_C(graph);
    r.parts_b = part_b.parts().size();
    r.parts_c = part_c.parts().size();

    std::vector<Permutation> expected;
    for (Residue j : multipliers(cs.n(), cs.elements(), cs.mode())) {
      expected.push_back(multiplier_perm(cs.n(), j));
    }
    std::sort(expected.begin(), expected.end());
    r.multipliers = expected.size();

    const auto trace = propagation_certifier(graph);
    r.prop_covered = trace.covered;
    r.prop_rounds = trace.total_rounds();
    r.prop_invariant = trace.invariant_held;
    if (!trace.invariant_held) ++r.audit_failures;
    if (trace.covered != r.connected) ++r.audit_failures;

    const auto subgroups = subgroup_generators(cs.n(), cs.elements());
    SearchConfig cfg;
    cfg.max_solutions = spec.max_solutions;
    cfg.oracle_limit = spec.oracle_limit;
    for (PartitionKind kind : spec.kinds) {
      const ArcPartition& partition = kind == PartitionKind::B ? part_b : part_c;
      KindResult k;
      k.kind = kind;
      k.parts = partition.parts().size();
      std::vector<Permutation> found;
      if (spec.enumerator == Enumerator::Oracle) {
        found = brute_oracle(graph, partition, true, spec.oracle_limit);
      } else {
        found = enumerate_respecting(graph, partition, cfg);
        if (spec.enumerator == Enumerator::Both) {
          k.oracle_agrees = found == brute_oracle(graph, partition, true, spec.oracle_limit);
        }
      }
      k.respecting = found.size();
      if (found == expected) {
        k.verdict = Verdict::Match;
      } else if (!r.connected && std::includes(found.begin(), found.end(), expected.begin(),
                                               expected.end())) {
        k.verdict = Verdict::ExpectedMismatch;
      } else {
        k.verdict = Verdict::Mismatch;
      }
      if (kind == PartitionKind::C) {
        for (const auto& p : found) r.audit_failures += audit_automorphism(graph, p, part_b, subgroups);
      }
      r.verdict = std::max(r.verdict, k.verdict);
      r.kinds.push_back(k);
    }
  } catch (const ResourceError& e) {
    r.error = e.what();
    r.verdict = Verdict::Error;
  }
  if (spec.record_timing) {
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  }
  return r;
}

VerificationReport verify_theorem(const SweepSpec& spec) {
  validate(spec);
  VerificationReport report;
  report.spec = spec;
  const auto instances = generate_instances(spec);
  report.instances.resize(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      report.instances[i] = verify_instance(instances[i], spec);
    }
  };
  const int workers = std::min<int>(spec.jobs, std::max<std::size_t>(instances.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  report.aggregates = compute_aggregates(report.instances);
  for (const auto& r : report.instances) {
    const std::string key = ConnectionSet(r.n, r.set, r.mode).to_string();
    if (!r.error.empty()) report.failures.push_back(key + ": " + r.error);
    if (r.verdict == Verdict::Mismatch) report.failures.push_back(key + ": theorem mismatch");
    for (const auto& k : r.kinds) {
      if (k.oracle_agrees == false) {
        report.failures.push_back(key + ": enumerator disagrees with oracle on partition " +
                                  std::string(1, kind_letter(k.kind)));
      }
    }
    if (r.audit_failures > 0) {
      report.failures.push_back(key + ": " + std::to_string(r.audit_failures) +
                                " audit failure(s)");
    }
  }
  return report;
}

int exit_code(const VerificationReport& report) {
  const auto& a = report.aggregates;
  if (a.mismatches > 0 || a.oracle_discrepancies > 0 || a.audit_failures > 0) return 1;
  if (a.errors > 0) return 3;
  return 0;
}

}  // namespace circaut
