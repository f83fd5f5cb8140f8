#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circaut/error.hpp"
#include "circaut/harness.hpp"

namespace py = pybind11;
using namespace circaut;

PYBIND11_MODULE(_circaut, m) {
  m.doc() = "Circulant graph automorphisms that respect generator partitions";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::enum_<Mode>(m, "Mode")
      .value("DIRECTED", Mode::Directed)
      .value("UNDIRECTED", Mode::Undirected);
  py::enum_<PartitionKind>(m, "PartitionKind")
      .value("B", PartitionKind::B)
      .value("C", PartitionKind::C);

  m.def("order_mod", &order_mod, py::arg("n"), py::arg("s"));
  m.def("cyclic_subgroup", &cyclic_subgroup, py::arg("n"), py::arg("s"));
  m.def("crt_combine", [](const std::vector<std::pair<Residue, Residue>>& congruences) {
    return crt_combine(congruences);
  });
  m.def("multipliers", [](Residue n, const std::vector<Residue>& s, Mode mode) {
    return multipliers(n, s, mode);
  }, py::arg("n"), py::arg("elements"), py::arg("mode"));

  py::class_<ConnectionSet>(m, "ConnectionSet")
      .def(py::init<Residue, std::vector<Residue>, Mode>(), py::arg("n"), py::arg("elements"),
           py::arg("mode"))
      .def_property_readonly("n", &ConnectionSet::n)
      .def_property_readonly("elements", &ConnectionSet::elements)
      .def_property_readonly("mode", &ConnectionSet::mode)
      .def("__str__", &ConnectionSet::to_string);
  m.def("parse_instance", [](const std::string& text, bool close) {
    return parse_instance(text, close);
  }, py::arg("text"), py::arg("close_inverse") = false);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Vertex>>())
      .def_property_readonly("images", &Permutation::images)
      .def("__call__", &Permutation::operator())
      .def("inverse", &Permutation::inverse)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__repr__", &Permutation::to_string);
  m.def("compose", &compose);
  m.def("multiplier_perm", &multiplier_perm, py::arg("n"), py::arg("j"));

  py::class_<Part>(m, "Part")
      .def_readonly("arcs", &Part::arcs)
      .def_readonly("generators", &Part::generators)
      .def_readonly("coset_rep", &Part::coset_rep);
  py::class_<ArcPartition>(m, "ArcPartition")
      .def_property_readonly("kind", &ArcPartition::kind)
      .def_property_readonly("parts", &ArcPartition::parts);

  py::class_<CirculantGraph>(m, "CirculantGraph")
      .def(py::init<ConnectionSet>())
      .def_property_readonly("n", &CirculantGraph::n)
      .def_property_readonly("connection_set", &CirculantGraph::connection_set)
      .def_property_readonly("arcs", [](const CirculantGraph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& a : g.arcs()) out.emplace_back(a.tail, a.head);
        return out;
      });
  m.def("build", &build, py::arg("n"), py::arg("elements"), py::arg("mode"));
  m.def("is_connected", &is_connected);
  m.def("partition_B", &partition_B);
  m.def("partition_C", &partition_C);
  m.def("refines", &refines, py::arg("fine"), py::arg("coarse"));
  m.def("is_automorphism", &is_automorphism);
  m.def("respects", &respects, py::arg("graph"), py::arg("p"), py::arg("partition"));

  m.def("enumerate_respecting",
        [](const CirculantGraph& g, const ArcPartition& p, bool fix_zero, bool oracle,
           std::optional<std::size_t> max_solutions) {
          SearchConfig cfg;
          cfg.fix_zero = fix_zero;
          cfg.oracle_mode = oracle;
          cfg.max_solutions = max_solutions;
          return enumerate_respecting(g, p, cfg);
        },
        py::arg("graph"), py::arg("partition"), py::arg("fix_zero") = true,
        py::arg("oracle") = false, py::arg("max_solutions") = py::none());
  m.def("brute_oracle", [](const CirculantGraph& g, const ArcPartition& p, bool fix_zero) {
    return brute_oracle(g, p, fix_zero);
  }, py::arg("graph"), py::arg("partition"), py::arg("fix_zero") = true);

  m.def("normalize_to_multiplier", [](const CirculantGraph& g, const Permutation& p) -> py::object {
    const auto outcome = normalize_to_multiplier(g, p);
    if (!outcome.ok()) return py::none();
    py::list residues;
    for (const auto& c : outcome.witness->residues) {
      residues.append(py::make_tuple(c.modulus, c.residue));
    }
    py::dict d;
    d["residues"] = residues;
    d["combined"] = outcome.witness->combined;
    return d;
  });

  m.def("propagation_certifier",
        [](const CirculantGraph& g, std::optional<std::vector<Residue>> order) {
          const auto t = propagation_certifier(g, order);
          py::list rounds;
          for (const auto& st : t.stages) {
            for (const auto& r : st.rounds) rounds.append(r.added);
          }
          py::dict d;
          d["order"] = t.order;
          d["final_set"] = t.final_set;
          d["covered"] = t.covered;
          d["rounds"] = rounds;
          d["invariant_held"] = t.invariant_held;
          return d;
        },
        py::arg("graph"), py::arg("order") = py::none());
  m.def("coset_image_check", &coset_image_check);

  m.def("verify_json",
        [](int n_min, int n_max, const std::string& modes, const std::string& kinds,
           bool connected_only, bool oracle_check, int jobs) {
          SweepSpec spec;
          spec.n_min = n_min;
          spec.n_max = n_max;
          spec.modes.clear();
          for (char c : modes) spec.modes.push_back(c == 'u' ? Mode::Undirected : Mode::Directed);
          spec.kinds.clear();
          for (char c : kinds) spec.kinds.push_back(c == 'B' ? PartitionKind::B : PartitionKind::C);
          spec.connectivity = connected_only ? Connectivity::Connected : Connectivity::All;
          spec.enumerator = oracle_check ? Enumerator::Both : Enumerator::Backtracking;
          spec.jobs = jobs;
          VerificationReport report;
          {
            py::gil_scoped_release release;
            report = verify_theorem(spec);
          }
          return to_json_text(report);
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("modes") = "du", py::arg("kinds") = "C",
        py::arg("connected_only") = false, py::arg("oracle_check") = false, py::arg("jobs") = 1);
}
