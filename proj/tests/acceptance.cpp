// Acceptance suite: exhaustive desk-scale checks that circulant automorphisms
// fixing 0 and respecting the cycle partition are exactly the multipliers.
// Prints one PASS/FAIL line per criterion; exit status is the failure count.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "circaut/harness.hpp"

using namespace circaut;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kRuntimeBudgetSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << " -- " << o.detail
            << " (" << timing << ")" << std::endl;
  if (!o.pass) ++failures;
}

std::vector<Residue> subset_of(Residue n, std::uint32_t mask) {
  std::vector<Residue> S;
  for (Residue s = 1; s < n; ++s) {
    if (mask >> (s - 1) & 1) S.push_back(s);
  }
  return S;
}

bool inverse_closed(Residue n, const std::vector<Residue>& S) {
  return std::all_of(S.begin(), S.end(), [&](Residue s) {
    return std::binary_search(S.begin(), S.end(), n - s);
  });
}

// Connection sets with n in [lo, hi] for one mode, connectivity-filtered.
std::vector<ConnectionSet> instances(int lo, int hi, Mode mode, bool connected_only) {
  std::vector<ConnectionSet> out;
  for (Residue n = lo; n <= hi; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      auto S = subset_of(n, mask);
      if (mode == Mode::Undirected && !inverse_closed(n, S)) continue;
      if (connected_only && gcd_with(n, S) != 1) continue;
      out.emplace_back(n, S, mode);
    }
  }
  return out;
}

std::vector<Permutation> multiplier_perms(const ConnectionSet& cs) {
  std::vector<Permutation> out;
  for (Residue j : multipliers(cs.n(), cs.elements(), cs.mode())) out.push_back(multiplier_perm(cs.n(), j));
  std::sort(out.begin(), out.end());
  return out;
}

struct TheoremRun {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t automorphisms = 0;
  double seconds = 0;
  std::string first_bad;
  // (graph, automorphisms) for the Lemma j and corollary checks
  std::vector<std::pair<ConnectionSet, std::vector<Permutation>>> found;
};

TheoremRun theorem_check(const std::vector<ConnectionSet>& sets, PartitionKind kind) {
  TheoremRun run;
  const auto start = Clock::now();
  for (const auto& cs : sets) {
    const CirculantGraph g(cs);
    auto found = enumerate_respecting(g, make_partition(g, kind));
    ++run.instances;
    run.automorphisms += found.size();
    if (found != multiplier_perms(cs)) {
      ++run.mismatches;
      if (run.first_bad.empty()) run.first_bad = cs.to_string();
    }
    run.found.emplace_back(cs, std::move(found));
  }
  run.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return run;
}

std::string summary(const TheoremRun& r) {
  std::ostringstream os;
  os << r.instances << " connected instances, " << r.automorphisms << " automorphisms, "
     << r.mismatches << " mismatches";
  if (!r.first_bad.empty()) os << " (first: " << r.first_bad << ")";
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  TheoremRun directed, undirected;

  report(1, "respecting C = multipliers, directed, n in 3..10", [&] {
    directed = theorem_check(instances(3, 10, Mode::Directed, true), PartitionKind::C);
    return Outcome{directed.mismatches == 0 && directed.seconds < kRuntimeBudgetSeconds,
                   summary(directed)};
  });

  report(2, "respecting C = multipliers, undirected, n in 3..12", [&] {
    undirected = theorem_check(instances(3, 12, Mode::Undirected, true), PartitionKind::C);
    return Outcome{undirected.mismatches == 0 && undirected.seconds < kRuntimeBudgetSeconds,
                   summary(undirected)};
  });

  report(3, "partition B on connected digraphs; C-respecting implies B-respecting", [&] {
    auto b = theorem_check(instances(3, 10, Mode::Directed, true), PartitionKind::B);
    std::size_t violations = 0, checked = 0;
    for (const auto* run : {&directed, &undirected}) {
      for (const auto& [cs, autos] : run->found) {
        const CirculantGraph g(cs);
        const auto B = partition_B(g);
        for (const auto& p : autos) {
          ++checked;
          if (!respects(g, p, B)) ++violations;
        }
      }
    }
    std::ostringstream os;
    os << "B: " << summary(b) << "; corollary: " << checked << " automorphisms, " << violations
       << " violations";
    return Outcome{b.mismatches == 0 && violations == 0, os.str()};
  });

  std::vector<std::tuple<ConnectionSet, PartitionKind, std::vector<Permutation>>> small;
  report(4, "backtracking = brute oracle, n <= 8, both modes and partitions", [&] {
    std::size_t cases = 0, discrepancies = 0;
    std::string first_bad;
    for (Mode mode : {Mode::Directed, Mode::Undirected}) {
      for (const auto& cs : instances(2, 8, mode, false)) {
        const CirculantGraph g(cs);
        for (PartitionKind kind : {PartitionKind::B, PartitionKind::C}) {
          const auto P = make_partition(g, kind);
          auto found = enumerate_respecting(g, P);
          ++cases;
          if (found != brute_oracle(g, P, true)) {
            ++discrepancies;
            if (first_bad.empty()) first_bad = cs.to_string() + " " + kind_letter(kind);
          }
          small.emplace_back(cs, kind, std::move(found));
        }
      }
    }
    std::ostringstream os;
    os << cases << " (instance, partition) cases, " << discrepancies << " discrepancies";
    if (!first_bad.empty()) os << " (first: " << first_bad << ")";
    return Outcome{discrepancies == 0, os.str()};
  });

  report(5, "Circ(6; {2,4}) undirected: 12 respecting C vs multipliers {1,5}", [&] {
    const CirculantGraph g(ConnectionSet(6, {2, 4}, Mode::Undirected));
    auto found = enumerate_respecting(g, partition_C(g));
    auto oracle = brute_oracle(g, partition_C(g), true);
    auto js = multipliers(6, g.connection_set().elements(), Mode::Undirected);
    auto mults = multiplier_perms(g.connection_set());
    bool strict = std::includes(found.begin(), found.end(), mults.begin(), mults.end()) &&
                  found.size() > mults.size();
    std::ostringstream os;
    os << found.size() << " automorphisms (oracle " << oracle.size() << "), multipliers {";
    for (std::size_t i = 0; i < js.size(); ++i) os << (i ? "," : "") << js[i];
    os << "}";
    return Outcome{found.size() == 12 && found == oracle && js == std::vector<Residue>{1, 5} && strict,
                   os.str()};
  });

  report(6, "multiplier normalization round trip on criteria 1-2 automorphisms", [&] {
    std::size_t checked = 0, bad = 0;
    for (const auto* run : {&directed, &undirected}) {
      for (const auto& [cs, autos] : run->found) {
        const CirculantGraph g(cs);
        for (const auto& p : autos) {
          ++checked;
          auto outcome = normalize_to_multiplier(g, p);
          if (!outcome.ok()) {
            ++bad;
            continue;
          }
          const auto& w = *outcome.witness;
          bool ok = multiplier_perm(cs.n(), w.combined) == p;
          for (const auto& c : w.residues) {
            for (Residue s : cs.elements()) {
              ok = ok && mod(p(static_cast<Vertex>(s)) - c.residue * s, c.modulus) == 0;
            }
          }
          if (!ok) ++bad;
        }
      }
    }
    return Outcome{bad == 0 && checked > 0,
                   std::to_string(checked) + " automorphisms, " + std::to_string(bad) + " failures"};
  });

  report(7, "propagation coverage <=> gcd(n,S)=1; order invariance; coset invariant; Circ(12;{4,3})",
         [&] {
    std::size_t exhaustive = 0, random = 0, orderings = 0, wrong = 0, invariant_breaks = 0;
    auto check = [&](const CirculantGraph& g, std::optional<std::vector<Residue>> order = {}) {
      auto t = propagation_certifier(g, order);
      if (t.covered != (gcd_with(g.n(), g.connection_set().elements()) == 1)) ++wrong;
      if (!t.invariant_held) ++invariant_breaks;
      return t.covered;
    };
    for (const auto& cs : instances(2, 12, Mode::Directed, false)) {
      const CirculantGraph g(cs);
      const bool base = check(g);
      ++exhaustive;
      if (cs.elements().size() <= 3) {
        auto order = cs.elements();
        while (std::next_permutation(order.begin(), order.end())) {
          ++orderings;
          if (check(g, order) != base) ++wrong;
        }
      }
    }
    std::mt19937 rng(20260101);
    for (int i = 0; i < 500; ++i) {
      Residue n = 2 + static_cast<Residue>(rng() % 63);
      std::vector<Residue> S;
      for (Residue s = 1; s < n; ++s) {
        if (rng() % 8 == 0) S.push_back(s);
      }
      if (S.empty()) S.push_back(1 + static_cast<Residue>(rng() % (n - 1)));
      check(CirculantGraph(ConnectionSet(n, S, Mode::Directed)));
      ++random;
    }
    // trace: T_0 = {0,3,4,6,8,9}; rule matches {0,7} in round 1 (0 already fixed)
    auto t = propagation_certifier(CirculantGraph(ConnectionSet(12, {4, 3}, Mode::Directed)));
    std::vector<std::vector<Residue>> added;
    for (const auto& r : t.stages.at(0).rounds) added.push_back(r.added);
    const bool trace_ok =
        t.stages.size() == 1 && t.stages[0].initial == std::vector<Residue>{0, 3, 4, 6, 8, 9} &&
        t.stages[0].rounds.size() == 4 &&
        t.stages[0].rounds[0].matched == std::vector<Residue>{0, 7} &&
        added == std::vector<std::vector<Residue>>{{7}, {10, 11}, {1, 2}, {5}} && t.covered &&
        t.final_set.size() == 12;
    std::ostringstream os;
    os << exhaustive << " exhaustive + " << random << " random instances, " << orderings
       << " reorderings, " << wrong << " coverage errors, " << invariant_breaks
       << " invariant violations, Circ(12;{4,3}) trace " << (trace_ok ? "ok" : "WRONG");
    return Outcome{wrong == 0 && invariant_breaks == 0 && trace_ok, os.str()};
  });

  report(8, "images of cosets of <S'> are cosets, all S' subset of S, n <= 8", [&] {
    std::size_t checks = 0, bad = 0;
    for (const auto& [cs, kind, autos] : small) {
      const CirculantGraph g(cs);
      const auto& S = cs.elements();
      for (const auto& p : autos) {
        for (std::uint32_t mask = 0; mask < (1u << S.size()); ++mask) {
          std::vector<Residue> sub;
          for (std::size_t i = 0; i < S.size(); ++i) {
            if (mask >> i & 1) sub.push_back(S[i]);
          }
          ++checks;
          if (!coset_image_check(g, p, sub)) ++bad;
        }
      }
    }
    return Outcome{bad == 0 && checks > 0,
                   std::to_string(checks) + " (automorphism, S') checks, " + std::to_string(bad) +
                       " failures"};
  });

  report(9, "verify sweep: jobs=1 and jobs=8 give byte-identical JSON", [&] {
    SweepSpec spec;
    spec.n_min = 3;
    spec.n_max = 9;
    spec.modes = {Mode::Directed, Mode::Undirected};
    spec.kinds = {PartitionKind::B, PartitionKind::C};
    spec.connectivity = Connectivity::All;
    auto dir = std::filesystem::temp_directory_path() / "circaut_acceptance";
    std::filesystem::create_directories(dir);
    spec.jobs = 1;
    auto r1 = verify_theorem(spec);
    export_report(r1, ReportFormat::Json, (dir / "jobs1.json").string());
    spec.jobs = 8;
    auto r8 = verify_theorem(spec);
    export_report(r8, ReportFormat::Json, (dir / "jobs8.json").string());
    const auto a = read_file(dir / "jobs1.json"), b = read_file(dir / "jobs8.json");
    std::filesystem::remove_all(dir);
    std::ostringstream os;
    os << r1.instances.size() << " instances, " << a.size() << " bytes, "
       << (a == b ? "identical" : "DIFFERENT") << ", exit code " << exit_code(r1);
    return Outcome{a == b && !a.empty() && exit_code(r1) == 0, os.str()};
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failures;
}
