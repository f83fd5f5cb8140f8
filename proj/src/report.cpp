#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "circaut/error.hpp"
#include "circaut/harness.hpp"

namespace circaut {

using nlohmann::json;

namespace {

std::string connectivity_name(Connectivity c) {
  switch (c) {
    case Connectivity::Connected: return "connected";
    case Connectivity::Disconnected: return "disconnected";
    case Connectivity::All: return "all";
  }
  return "all";
}

Connectivity connectivity_from(const std::string& s) {
  if (s == "connected") return Connectivity::Connected;
  if (s == "disconnected") return Connectivity::Disconnected;
  if (s == "all") return Connectivity::All;
  throw InvalidInput("unknown connectivity '" + s + "'");
}

std::string enumerator_name(Enumerator e) {
  switch (e) {
    case Enumerator::Backtracking: return "backtracking";
    case Enumerator::Oracle: return "oracle";
    case Enumerator::Both: return "both";
  }
  return "backtracking";
}

Enumerator enumerator_from(const std::string& s) {
  if (s == "backtracking") return Enumerator::Backtracking;
  if (s == "oracle") return Enumerator::Oracle;
  if (s == "both") return Enumerator::Both;
  throw InvalidInput("unknown enumerator '" + s + "'");
}

Mode mode_from(const std::string& s) {
  if (s == "d") return Mode::Directed;
  if (s == "u") return Mode::Undirected;
  throw InvalidInput("unknown mode '" + s + "'");
}

PartitionKind kind_from(const std::string& s) {
  if (s == "B") return PartitionKind::B;
  if (s == "C") return PartitionKind::C;
  throw InvalidInput("unknown partition kind '" + s + "'");
}

json spec_json(const SweepSpec& spec) {
  // jobs is deliberately absent: the report must not depend on it
  json modes = json::array(), kinds = json::array();
  for (Mode m : spec.modes) modes.push_back(std::string(1, mode_letter(m)));
  for (PartitionKind k : spec.kinds) kinds.push_back(std::string(1, kind_letter(k)));
  return {{"n_min", spec.n_min},
          {"n_max", spec.n_max},
          {"modes", modes},
          {"kinds", kinds},
          {"connectivity", connectivity_name(spec.connectivity)},
          {"enumerator", enumerator_name(spec.enumerator)},
          {"max_solutions", spec.max_solutions ? json(*spec.max_solutions) : json(nullptr)},
          {"oracle_limit", spec.oracle_limit},
          {"record_timing", spec.record_timing}};
}

SweepSpec spec_from(const json& j) {
  SweepSpec spec;
  spec.n_min = j.at("n_min").get<int>();
  spec.n_max = j.at("n_max").get<int>();
  spec.modes.clear();
  for (const auto& m : j.at("modes")) spec.modes.push_back(mode_from(m.get<std::string>()));
  spec.kinds.clear();
  for (const auto& k : j.at("kinds")) spec.kinds.push_back(kind_from(k.get<std::string>()));
  spec.connectivity = connectivity_from(j.at("connectivity").get<std::string>());
  spec.enumerator = enumerator_from(j.at("enumerator").get<std::string>());
  if (j.at("max_solutions").is_null()) {
    spec.max_solutions.reset();
  } else {
    spec.max_solutions = j.at("max_solutions").get<std::size_t>();
  }
  spec.oracle_limit = j.at("oracle_limit").get<int>();
  spec.record_timing = j.at("record_timing").get<bool>();
  return spec;
}

json instance_json(const InstanceResult& r) {
  json kinds = json::array();
  for (const auto& k : r.kinds) {
    kinds.push_back({{"kind", std::string(1, kind_letter(k.kind))},
                     {"parts", k.parts},
                     {"respecting", k.respecting},
                     {"verdict", to_string(k.verdict)},
                     {"oracle_agrees", k.oracle_agrees ? json(*k.oracle_agrees) : json(nullptr)}});
  }
  json out = {{"n", r.n},
              {"set", r.set},
              {"mode", std::string(1, mode_letter(r.mode))},
              {"connected", r.connected},
              {"parts_b", r.parts_b},
              {"parts_c", r.parts_c},
              {"kinds", kinds},
              {"multipliers", r.multipliers},
              {"verdict", to_string(r.verdict)},
              {"prop_covered", r.prop_covered},
              {"prop_rounds", r.prop_rounds},
              {"prop_invariant", r.prop_invariant},
              {"audit_failures", r.audit_failures},
              {"error", r.error}};
  if (r.ms) out["ms"] = *r.ms;
  return out;
}

InstanceResult instance_from(const json& j) {
  InstanceResult r;
  r.n = j.at("n").get<Residue>();
  r.set = j.at("set").get<std::vector<Residue>>();
  r.mode = mode_from(j.at("mode").get<std::string>());
  r.connected = j.at("connected").get<bool>();
  r.parts_b = j.at("parts_b").get<std::size_t>();
  r.parts_c = j.at("parts_c").get<std::size_t>();
  for (const auto& k : j.at("kinds")) {
    KindResult kr;
    kr.kind = kind_from(k.at("kind").get<std::string>());
    kr.parts = k.at("parts").get<std::size_t>();
    kr.respecting = k.at("respecting").get<std::size_t>();
    kr.verdict = verdict_from_string(k.at("verdict").get<std::string>());
    if (!k.at("oracle_agrees").is_null()) kr.oracle_agrees = k.at("oracle_agrees").get<bool>();
    r.kinds.push_back(kr);
  }
  r.multipliers = j.at("multipliers").get<std::size_t>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.prop_covered = j.at("prop_covered").get<bool>();
  r.prop_rounds = j.at("prop_rounds").get<int>();
  r.prop_invariant = j.at("prop_invariant").get<bool>();
  r.audit_failures = j.at("audit_failures").get<std::size_t>();
  r.error = j.at("error").get<std::string>();
  if (j.contains("ms")) r.ms = j.at("ms").get<double>();
  return r;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

json to_json(const VerificationReport& report) {
  json instances = json::array();
  for (const auto& r : report.instances) instances.push_back(instance_json(r));
  const auto& a = report.aggregates;
  return {{"spec", spec_json(report.spec)},
          {"instances", instances},
          {"aggregates",
           {{"instances", a.instances},
            {"connected", a.connected},
            {"matches", a.matches},
            {"expected_mismatches", a.expected_mismatches},
            {"mismatches", a.mismatches},
            {"errors", a.errors},
            {"oracle_discrepancies", a.oracle_discrepancies},
            {"audit_failures", a.audit_failures}}},
          {"failures", report.failures}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  report.spec = spec_from(j.at("spec"));
  for (const auto& r : j.at("instances")) report.instances.push_back(instance_from(r));
  const auto& a = j.at("aggregates");
  auto& out = report.aggregates;
  out.instances = a.at("instances").get<std::size_t>();
  out.connected = a.at("connected").get<std::size_t>();
  out.matches = a.at("matches").get<std::size_t>();
  out.expected_mismatches = a.at("expected_mismatches").get<std::size_t>();
  out.mismatches = a.at("mismatches").get<std::size_t>();
  out.errors = a.at("errors").get<std::size_t>();
  out.oracle_discrepancies = a.at("oracle_discrepancies").get<std::size_t>();
  out.audit_failures = a.at("audit_failures").get<std::size_t>();
  report.failures = j.at("failures").get<std::vector<std::string>>();
  return report;
}

std::string to_json_text(const VerificationReport& report) {
  // object keys are std::map-ordered, so the text is sorted and stable
  return to_json(report).dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "n,set,mode,connected,parts_B,parts_C,aut_B,aut_C,multipliers,verdict,prop_rounds,ms\n";
  for (const auto& r : report.instances) {
    os << r.n << ",\"";
    for (std::size_t i = 0; i < r.set.size(); ++i) os << (i ? "," : "") << r.set[i];
    os << "\"," << mode_letter(r.mode) << ',' << (r.connected ? "true" : "false") << ','
       << r.parts_b << ',' << r.parts_c << ',';
    const auto* b = r.kind(PartitionKind::B);
    const auto* c = r.kind(PartitionKind::C);
    if (b) os << b->respecting;
    os << ',';
    if (c) os << c->respecting;
    os << ',' << r.multipliers << ',' << to_string(r.verdict) << ',' << r.prop_rounds << ',';
    if (r.ms) os << fixed3(*r.ms);
    os << '\n';
  }
  return os.str();
}

void export_report(const VerificationReport& report, ReportFormat format,
                   const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << (format == ReportFormat::Json ? to_json_text(report) : to_csv(report));
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace circaut
