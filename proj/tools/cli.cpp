#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "circaut/error.hpp"
#include "circaut/harness.hpp"

namespace circaut::cli {

namespace {

std::string join(const std::vector<Residue>& values, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

std::string braces(const std::vector<Residue>& values) { return "{" + join(values) + "}"; }

std::vector<Residue> parse_list(const std::string& text) {
  std::vector<Residue> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad generator '" + token + "' in order list");
    }
  }
  return out;
}

PartitionKind kind_of(const std::string& s) { return s == "B" ? PartitionKind::B : PartitionKind::C; }

void print_summary(std::ostream& out, const CirculantGraph& graph) {
  const auto& cs = graph.connection_set();
  out << "instance     " << cs.to_string() << '\n'
      << "graph        Circ(" << cs.n() << "; " << braces(cs.elements()) << ") "
      << (graph.directed() ? "directed" : "undirected") << '\n'
      << "vertices     " << graph.n() << '\n'
      << (graph.directed() ? "arcs         " : "edges        ") << graph.arcs().size() << '\n'
      << "connected    " << (is_connected(graph) ? "yes" : "no") << '\n'
      << "parts B      " << partition_B(graph).parts().size() << '\n'
      << "parts C      " << partition_C(graph).parts().size() << '\n'
      << "multipliers  " << braces(multipliers(cs.n(), cs.elements(), cs.mode())) << '\n';
}

void print_partition(std::ostream& out, const CirculantGraph& graph, const ArcPartition& p) {
  out << "partition " << kind_letter(p.kind()) << " of " << graph.connection_set().to_string()
      << ": " << p.parts().size() << " parts\n";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    const Part& part = p.parts()[i];
    out << "  [" << i << "] s=" << braces(part.generators);
    if (part.coset_rep) out << " coset=" << *part.coset_rep;
    out << " size=" << part.arcs.size() << ':';
    for (int a : part.arcs) {
      const Arc& arc = graph.arcs()[a];
      out << ' ' << (graph.directed() ? "(" : "{") << arc.tail << ',' << arc.head
          << (graph.directed() ? ")" : "}");
    }
    out << '\n';
  }
}

void print_trace(std::ostream& out, const PropagationTrace& t) {
  out << "order        " << join(t.order) << '\n';
  for (const auto& st : t.stages) {
    out << "stage k=" << st.k << " s_next=" << st.next_generator << " n'=" << st.base_order
        << " r=" << st.generator_order << " d=" << st.d << '\n'
        << "  T_0 = " << braces(st.initial) << '\n';
    for (std::size_t m = 0; m < st.rounds.size(); ++m) {
      const auto& round = st.rounds[m];
      out << "  round " << m + 1 << ": matched " << braces(round.matched) << " added "
          << braces(round.added) << (round.coset_union ? "" : "  [coset invariant violated]")
          << '\n';
    }
    out << "  final " << braces(st.final_set)
        << (st.reached_subgroup ? " = S_{k+1}" : " != S_{k+1}") << '\n';
  }
  out << "final        " << braces(t.final_set) << '\n'
      << "rounds       " << t.total_rounds() << '\n'
      << "invariant    " << (t.invariant_held ? "held" : "VIOLATED") << '\n'
      << "covered      " << (t.covered ? "yes" : "no") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant automorphisms that respect generator partitions"};
  app.require_subcommand(1);

  std::string instance;
  bool close = false;
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", instance, "n:s1,s2,...[:d|:u]")->required();
    sub->add_flag("--close", close, "complete an undirected set under negation");
  };

  auto* build_cmd = app.add_subcommand("build", "print a graph summary");
  add_instance(build_cmd);

  std::string kind = "C";
  auto* partition_cmd = app.add_subcommand("partition", "print partition B or C");
  add_instance(partition_cmd);
  partition_cmd->add_option("--kind", kind)->check(CLI::IsMember({"B", "C"}));

  bool fix_zero = false, oracle = false;
  std::size_t max_solutions = 0;
  int max_n = 64;
  auto* autos_cmd = app.add_subcommand("autos", "list automorphisms respecting a partition");
  add_instance(autos_cmd);
  autos_cmd->add_option("--kind", kind)->check(CLI::IsMember({"B", "C"}));
  autos_cmd->add_flag("--fix-zero", fix_zero, "only automorphisms fixing vertex 0");
  autos_cmd->add_flag("--oracle", oracle, "filter all permutations instead of backtracking");
  autos_cmd->add_option("--max-solutions", max_solutions, "0 means unlimited");
  autos_cmd->add_option("--max-n", max_n, "enumerator size cap");

  std::string perm_text;
  auto* normalize_cmd = app.add_subcommand("normalize", "CRT multiplier witness of a permutation");
  add_instance(normalize_cmd);
  normalize_cmd->add_option("--perm", perm_text, "[p(0), p(1), ...]")->required();

  std::string order_text;
  auto* propagate_cmd = app.add_subcommand("propagate", "fixed-set closure trace");
  add_instance(propagate_cmd);
  propagate_cmd->add_option("--order", order_text, "generator order s_a,s_b,...");

  SweepSpec spec;
  std::string mode_text = "both", kind_text = "both", out_path;
  bool connected_only = false, oracle_check = false, timing = false;
  std::size_t sweep_cap = *spec.max_solutions;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive sweep over connection sets");
  verify_cmd->add_option("--n-min", spec.n_min)->required();
  verify_cmd->add_option("--n-max", spec.n_max)->required();
  verify_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"d", "u", "both"}));
  verify_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"B", "C", "both"}));
  verify_cmd->add_flag("--connected-only", connected_only);
  verify_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the brute oracle");
  verify_cmd->add_option("--jobs", spec.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-solutions", sweep_cap);
  verify_cmd->add_flag("--timing", timing, "record per-instance milliseconds");
  verify_cmd->add_option("--out", out_path, "report.json or report.csv")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (verify_cmd->parsed()) {
      spec.modes = mode_text == "d"   ? std::vector{Mode::Directed}
                   : mode_text == "u" ? std::vector{Mode::Undirected}
                                      : std::vector{Mode::Directed, Mode::Undirected};
      spec.kinds = kind_text == "B"   ? std::vector{PartitionKind::B}
                   : kind_text == "C" ? std::vector{PartitionKind::C}
                                      : std::vector{PartitionKind::B, PartitionKind::C};
      spec.connectivity = connected_only ? Connectivity::Connected : Connectivity::All;
      spec.enumerator = oracle_check ? Enumerator::Both : Enumerator::Backtracking;
      spec.max_solutions = sweep_cap;
      spec.record_timing = timing;
      const bool csv = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv";
      const auto report = verify_theorem(spec);
      try {
        export_report(report, csv ? ReportFormat::Csv : ReportFormat::Json, out_path);
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
      }
      const auto& a = report.aggregates;
      out << "instances " << a.instances << ", connected " << a.connected << ", match "
          << a.matches << ", expected-mismatch " << a.expected_mismatches << ", mismatch "
          << a.mismatches << ", errors " << a.errors << ", oracle discrepancies "
          << a.oracle_discrepancies << ", audit failures " << a.audit_failures << '\n';
      for (const auto& f : report.failures) out << "  " << f << '\n';
      out << "report written to " << out_path << '\n';
      return exit_code(report);
    }

    const CirculantGraph graph(parse_instance(instance, close));
    if (build_cmd->parsed()) {
      print_summary(out, graph);
    } else if (partition_cmd->parsed()) {
      print_partition(out, graph, make_partition(graph, kind_of(kind)));
    } else if (autos_cmd->parsed()) {
      SearchConfig cfg;
      cfg.fix_zero = fix_zero;
      cfg.oracle_mode = oracle;
      cfg.max_n = max_n;
      if (max_solutions > 0) cfg.max_solutions = max_solutions;
      const auto found = enumerate_respecting(graph, make_partition(graph, kind_of(kind)), cfg);
      out << found.size() << " automorphism(s) respecting " << kind << (fix_zero ? " fixing 0" : "")
          << '\n';
      for (const auto& p : found) out << p.to_string() << '\n';
    } else if (normalize_cmd->parsed()) {
      const auto outcome = normalize_to_multiplier(graph, parse_permutation(perm_text));
      if (!outcome.ok()) {
        out << "failure: " << outcome.failure << '\n';
        return kMismatch;
      }
      const auto& w = *outcome.witness;
      for (const auto& c : w.residues) {
        out << "j = " << c.residue << " (mod " << c.modulus << ")  via s = " << c.generator << '\n';
      }
      out << "combined j = " << w.combined << '\n'
          << "beta = " << normalizing_multiplier(w).to_string() << '\n';
    } else if (propagate_cmd->parsed()) {
      std::optional<std::vector<Residue>> order;
      if (!order_text.empty()) order = parse_list(order_text);
      print_trace(out, propagation_certifier(graph, order));
    }
    return kOk;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace circaut::cli
