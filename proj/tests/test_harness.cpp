#include <filesystem>
#include <fstream>
#include <sstream>

#include "circaut/error.hpp"
#include "circaut/harness.hpp"
#include "doctest.h"

using namespace circaut;

namespace {

std::vector<std::vector<Residue>> sets_of(const std::vector<ConnectionSet>& v) {
  std::vector<std::vector<Residue>> out;
  for (const auto& cs : v) out.push_back(cs.elements());
  return out;
}

SweepSpec range(int lo, int hi, Mode mode, Connectivity c) {
  SweepSpec spec;
  spec.n_min = lo;
  spec.n_max = hi;
  spec.modes = {mode};
  spec.connectivity = c;
  return spec;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("generate_instances examples") {
  CHECK(generate_instances(range(4, 4, Mode::Directed, Connectivity::All)).size() == 7);
  CHECK(sets_of(generate_instances(range(4, 4, Mode::Undirected, Connectivity::All))) ==
        std::vector<std::vector<Residue>>{{1, 2, 3}, {1, 3}, {2}});
  CHECK(sets_of(generate_instances(range(5, 5, Mode::Undirected, Connectivity::Connected))) ==
        std::vector<std::vector<Residue>>{{1, 2, 3, 4}, {1, 4}, {2, 3}});
  auto disc = generate_instances(range(6, 6, Mode::Undirected, Connectivity::Disconnected));
  CHECK(sets_of(disc) == std::vector<std::vector<Residue>>{{2, 4}, {3}});
}

TEST_CASE("generation order is by n, then mode, then set") {
  SweepSpec spec = range(3, 5, Mode::Directed, Connectivity::All);
  spec.modes = {Mode::Undirected, Mode::Directed};
  auto all = generate_instances(spec);
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto key = [](const ConnectionSet& c) { return std::tuple(c.n(), c.mode(), c.elements()); };
    CHECK(key(all[i - 1]) < key(all[i]));
  }
}

TEST_CASE("verify: directed connected sweep matches") {
  auto spec = range(3, 8, Mode::Directed, Connectivity::Connected);
  spec.enumerator = Enumerator::Both;
  auto report = verify_theorem(spec);
  CHECK(report.aggregates.instances > 0);
  CHECK(report.aggregates.matches == report.aggregates.instances);
  CHECK(report.failures.empty());
  CHECK(exit_code(report) == 0);
  for (const auto& r : report.instances) {
    CHECK(r.prop_covered);
    CHECK(r.kind(PartitionKind::C)->oracle_agrees == true);
  }
}

TEST_CASE("verify: disconnected Circ(6; {2,4}) is an expected mismatch") {
  auto report = verify_theorem(range(6, 6, Mode::Undirected, Connectivity::Disconnected));
  const InstanceResult* hit = nullptr;
  for (const auto& r : report.instances) {
    if (r.set == std::vector<Residue>{2, 4}) hit = &r;
  }
  REQUIRE(hit);
  CHECK(hit->kind(PartitionKind::C)->respecting == 12);
  CHECK(hit->multipliers == 2);
  CHECK(hit->verdict == Verdict::ExpectedMismatch);
  CHECK_FALSE(hit->prop_covered);
  CHECK(report.failures.empty());
  CHECK(exit_code(report) == 0);
}

TEST_CASE("verify: empty range") {
  auto report = verify_theorem(range(9, 8, Mode::Directed, Connectivity::All));
  CHECK(report.instances.empty());
  CHECK(report.failures.empty());
  CHECK(report.aggregates == Aggregates{});
  auto j = to_json(report);
  CHECK(j["instances"].empty());
  CHECK(j["aggregates"]["instances"] == 0);
  CHECK(j["aggregates"]["mismatches"] == 0);
}

TEST_CASE("resource errors are recorded, not thrown") {
  auto spec = range(8, 8, Mode::Undirected, Connectivity::Disconnected);
  spec.max_solutions = 3;
  auto report = verify_theorem(spec);
  CHECK(report.aggregates.errors > 0);
  CHECK_FALSE(report.failures.empty());
  CHECK(exit_code(report) == 3);
}

TEST_CASE("spec validation") {
  auto spec = range(3, 10, Mode::Directed, Connectivity::All);
  spec.enumerator = Enumerator::Oracle;
  CHECK_THROWS_AS(verify_theorem(spec), InvalidInput);
  spec = range(3, 4, Mode::Directed, Connectivity::All);
  spec.jobs = 0;
  CHECK_THROWS_AS(verify_theorem(spec), InvalidInput);
  spec.jobs = 1;
  spec.kinds.clear();
  CHECK_THROWS_AS(verify_theorem(spec), InvalidInput);
}

TEST_CASE("reports: aggregates, csv, json round trip, jobs independence") {
  SweepSpec spec = range(3, 7, Mode::Directed, Connectivity::All);
  spec.modes = {Mode::Directed, Mode::Undirected};
  spec.kinds = {PartitionKind::B, PartitionKind::C};
  auto one = verify_theorem(spec);
  spec.jobs = 4;
  auto four = verify_theorem(spec);
  CHECK(to_json_text(one) == to_json_text(four));
  CHECK(compute_aggregates(one.instances) == one.aggregates);

  auto back = report_from_json(nlohmann::json::parse(to_json_text(one)));
  CHECK(back.instances == one.instances);
  CHECK(back.aggregates == one.aggregates);
  CHECK(back.failures == one.failures);
  CHECK(to_json_text(back) == to_json_text(one));

  VerificationReport single;
  single.spec = spec;
  single.instances.push_back(verify_instance(ConnectionSet(8, {1, 2}, Mode::Directed), spec));
  single.aggregates = compute_aggregates(single.instances);
  auto csv = to_csv(single);
  CHECK(csv ==
        "n,set,mode,connected,parts_B,parts_C,aut_B,aut_C,multipliers,verdict,prop_rounds,ms\n"
        "8,\"1,2\",d,true,2,3,1,1,1,match,0,\n");
}

TEST_CASE("timing is opt-in") {
  SweepSpec spec = range(4, 4, Mode::Directed, Connectivity::All);
  CHECK_FALSE(verify_theorem(spec).instances[0].ms.has_value());
  spec.record_timing = true;
  auto report = verify_theorem(spec);
  CHECK(report.instances[0].ms.has_value());
  auto back = report_from_json(to_json(report));
  CHECK(back.instances[0].ms == report.instances[0].ms);
}

TEST_CASE("export_report") {
  auto dir = std::filesystem::temp_directory_path() / "circaut_export_test";
  std::filesystem::create_directories(dir);
  auto report = verify_theorem(range(3, 4, Mode::Undirected, Connectivity::All));
  export_report(report, ReportFormat::Json, (dir / "r.json").string());
  export_report(report, ReportFormat::Csv, (dir / "r.csv").string());
  std::ifstream in(dir / "r.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_json_text(report));
  CHECK_THROWS_AS(export_report(report, ReportFormat::Json, (dir / "missing" / "r.json").string()),
                  std::runtime_error);
  std::filesystem::remove_all(dir);
}

}
