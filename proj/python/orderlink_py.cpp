#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orderlink/generators.hpp"
#include "orderlink/io.hpp"
#include "orderlink/oracle.hpp"
#include "orderlink/solver.hpp"

namespace py = pybind11;
using namespace orderlink;

namespace {

using VertexList = std::vector<VertexId>;

std::vector<VertexList> to_lists(std::span<const Path> paths) {
  std::vector<VertexList> out;
  for (const Path& p : paths) out.push_back(p.vertices);
  return out;
}

std::vector<Path> to_paths(const std::vector<VertexList>& lists) {
  std::vector<Path> out;
  for (const auto& l : lists) out.push_back(Path{l});
  return out;
}

std::vector<TerminalPair> to_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<TerminalPair> out;
  for (auto [x, y] : pairs) out.push_back({x, y});
  return out;
}

VertexList to_list(const VertexSet& s) { return s.to_vector(); }

py::object failure_obj(const std::optional<Failure>& f) {
  if (!f) return py::none();
  return py::make_tuple(f->stage, f->reason);
}

SolverOptions make_options(std::optional<std::size_t> type_threshold, bool check_bounds) {
  SolverOptions o;
  o.type_threshold = type_threshold;
  o.check_bounds = check_bounds;
  return o;
}

py::tuple verdict_tuple(const Verdict& v) { return py::make_tuple(v.ok, v.reason); }

}  // namespace

PYBIND11_MODULE(_orderlink, m) {
  m.doc() = "Ordered cycles and linkages in dense digraphs";

  py::register_exception<OracleRefused>(m, "OracleRefused", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
             std::vector<Arc> list;
             for (auto [u, v] : arcs) list.push_back({u, v});
             return build_digraph(n, list);
           }),
           py::arg("n"), py::arg("arcs") = std::vector<std::pair<VertexId, VertexId>>{})
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("has_arc", &Digraph::has_arc)
      .def("out_neighbors", [](const Digraph& d, VertexId v) { return to_list(d.out(v)); })
      .def("in_neighbors", [](const Digraph& d, VertexId v) { return to_list(d.in(v)); })
      .def("arcs",
           [](const Digraph& d) {
             std::vector<std::pair<VertexId, VertexId>> out;
             for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
             return out;
           })
      .def("min_semi_degree", &min_semi_degree)
      .def("to_arc_list", &to_arc_list)
      .def("to_dot", &to_dot)
      .def_static("from_arc_list", [](const std::string& text) { return parse_arc_list(text); })
      .def("__len__", &Digraph::order)
      .def("__repr__", [](const Digraph& d) {
        return "<Digraph n=" + std::to_string(d.order()) + " arcs=" + std::to_string(d.arc_count()) + ">";
      });

  py::class_<ExtremalWitness>(m, "ExtremalWitness")
      .def_readonly("digraph", &ExtremalWitness::digraph)
      .def_readonly("construction", &ExtremalWitness::construction)
      .def_readonly("case_label", &ExtremalWitness::case_label)
      .def_readonly("special_sequence", &ExtremalWitness::special_sequence)
      .def_property_readonly("pairs",
                             [](const ExtremalWitness& w) {
                               std::vector<std::pair<VertexId, VertexId>> out;
                               for (const auto& p : w.pairs) out.emplace_back(p.source, p.target);
                               return out;
                             })
      .def_property_readonly("roles", [](const ExtremalWitness& w) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& r : w.roles) out.emplace_back(part_name(r.part), r.name);
        return out;
      });

  m.def("complete_digraph", &complete_digraph, py::arg("n"));
  m.def("random_min_degree", &random_min_degree, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("extremal_linked", &extremal_linked, py::arg("ell"), py::arg("n"));
  m.def("extremal_ordered", &extremal_ordered, py::arg("k"), py::arg("n"));

  py::class_<SolveOutcome>(m, "SolveOutcome")
      .def_property_readonly("ok", &SolveOutcome::ok)
      .def_property_readonly("segments", [](const SolveOutcome& r) { return to_lists(r.segments); })
      .def_readonly("cycle", &SolveOutcome::cycle)
      .def_property_readonly("failure", [](const SolveOutcome& r) { return failure_obj(r.failure); })
      .def_readonly("augmentations", &SolveOutcome::augmentations)
      .def_readonly("initial_hard", &SolveOutcome::initial_hard)
      .def_property_readonly("trace", [](const SolveOutcome& r) {
        py::list steps;
        for (const auto& s : r.trace) {
          py::dict d;
          d["rule"] = rule_name(s.rule);
          d["missing"] = s.missing;
          d["changed"] = s.changed;
          d["before"] = py::make_tuple(s.j_before, s.t_before);
          d["after"] = py::make_tuple(s.j_after, s.t_after);
          d["reclassified"] = s.reclassified ? py::cast(*s.reclassified) : py::none();
          steps.append(d);
        }
        return steps;
      });

  py::class_<LinkOutcome>(m, "LinkOutcome")
      .def_property_readonly("ok", &LinkOutcome::ok)
      .def_property_readonly("paths", [](const LinkOutcome& r) { return to_lists(r.paths); })
      .def_property_readonly("failure", [](const LinkOutcome& r) { return failure_obj(r.failure); });

  m.def(
      "solve_ordered",
      [](const Digraph& d, const VertexList& specials, std::optional<std::size_t> type_threshold, bool check_bounds) {
        return solve_ordered(d, SpecialSequence(specials), make_options(type_threshold, check_bounds));
      },
      py::arg("digraph"), py::arg("specials"), py::arg("type_threshold") = py::none(), py::arg("check_bounds") = true,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve_linkage",
      [](const Digraph& d, const std::vector<std::pair<VertexId, VertexId>>& pairs,
         std::optional<std::size_t> type_threshold, bool check_bounds) {
        return solve_linkage(d, LinkRequest(to_pairs(pairs)), make_options(type_threshold, check_bounds));
      },
      py::arg("digraph"), py::arg("pairs"), py::arg("type_threshold") = py::none(), py::arg("check_bounds") = true,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify_ordered_cycle",
      [](const Digraph& d, const VertexList& specials, const std::vector<VertexList>& segments) {
        return verdict_tuple(verify_ordered_cycle(d, SpecialSequence(specials), to_paths(segments)));
      },
      py::arg("digraph"), py::arg("specials"), py::arg("segments"));
  m.def(
      "verify_linkage",
      [](const Digraph& d, const std::vector<std::pair<VertexId, VertexId>>& pairs,
         const std::vector<VertexList>& paths) {
        return verdict_tuple(verify_linkage(d, LinkRequest(to_pairs(pairs)), to_paths(paths)));
      },
      py::arg("digraph"), py::arg("pairs"), py::arg("paths"));

  m.def(
      "find_ordered_cycle",
      [](const Digraph& d, const VertexList& specials, std::size_t cap) -> std::optional<std::vector<VertexList>> {
        auto c = find_ordered_cycle(d, SpecialSequence(specials), OracleLimits{cap});
        if (!c) return std::nullopt;
        return to_lists(c->segments);
      },
      py::arg("digraph"), py::arg("specials"), py::arg("cap") = 24);
  m.def(
      "find_linkage",
      [](const Digraph& d, const std::vector<std::pair<VertexId, VertexId>>& pairs,
         std::size_t cap) -> std::optional<std::vector<VertexList>> {
        auto c = find_linkage(d, LinkRequest(to_pairs(pairs)), OracleLimits{cap});
        if (!c) return std::nullopt;
        return to_lists(c->segments);
      },
      py::arg("digraph"), py::arg("pairs"), py::arg("cap") = 24);
  m.def(
      "max_disjoint_short_paths",
      [](const Digraph& d, VertexId u, VertexId v, std::size_t max_length, std::size_t cap) {
        return max_disjoint_short_paths(d, u, v, max_length, OracleLimits{cap});
      },
      py::arg("digraph"), py::arg("u"), py::arg("v"), py::arg("max_length") = kMaxSegmentLength, py::arg("cap") = 24);
  m.def(
      "greedy_short_path_packing",
      [](const Digraph& d, VertexId u, VertexId v, std::size_t max_length) {
        return to_lists(greedy_short_path_packing(d, u, v, max_length));
      },
      py::arg("digraph"), py::arg("u"), py::arg("v"), py::arg("max_length") = kMaxSegmentLength);

  m.def("required_min_degree", &required_min_degree, py::arg("n"), py::arg("k"));
  m.def("hypothesis_holds", &hypothesis_holds, py::arg("n"), py::arg("k"), py::arg("delta"));
}
