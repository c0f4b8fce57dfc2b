// Python bindings: the _isored extension module.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isored/error.hpp"
#include "isored/graph.hpp"
#include "isored/isoequiv.hpp"
#include "isored/json_io.hpp"
#include "isored/laplacian.hpp"
#include "isored/reduce.hpp"
#include "isored/scc.hpp"
#include "isored/spectrum.hpp"
#include "isored/structural.hpp"
#include "isored/transform.hpp"
#include "isored/weight_format.hpp"
#include "isored/weightset.hpp"

namespace py = pybind11;
using namespace isored;

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Size: return "Size";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidStructuralSet: return "InvalidStructuralSet";
    case ErrorKind::NotInGPi: return "NotInGPi";
    case ErrorKind::EmptyTarget: return "EmptyTarget";
    case ErrorKind::EmptyBas: return "EmptyBas";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::OutsideSubring: return "OutsideSubring";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::HasLoops: return "HasLoops";
    case ErrorKind::NonconstantWeight: return "NonconstantWeight";
  }
  return "Unknown";
}

std::vector<int> vertex_set(const WeightedDigraph& g, const std::vector<std::string>& labels) {
  return indices_of(g, labels);
}

py::list spectrum_list(const SpectralList& s) {
  py::list out;
  for (const auto& e : s.entries) out.append(py::make_tuple(e.root, e.multiplicity));
  return out;
}

WeightedDigraph laplacian(const WeightedDigraph& g, const std::string& kind) {
  if (kind == "comb") return combinatorial_laplacian_graph(g);
  if (kind == "norm") return normalized_laplacian_graph(g, NormalizedMode::Numeric);
  if (kind == "norm-exact") return normalized_laplacian_graph(g, NormalizedMode::ExactSimilar);
  if (kind == "gen") return generalized_laplacian_graph(g);
  throw ParseError(0, "unknown Laplacian kind '" + kind + "' (expected comb, norm, norm-exact or gen)");
}

WeightedDigraph graph_from_edges(const std::vector<std::string>& vertices,
                                 const std::vector<std::tuple<std::string, std::string, py::object>>& edges) {
  std::vector<RawEdge> raw;
  for (const auto& [from, to, w] : edges) {
    RatFun weight = py::isinstance<RatFun>(w)   ? w.cast<RatFun>()
                    : py::isinstance<py::int_>(w) ? RatFun(w.cast<long>())
                                                  : parse_weight(py::str(w).cast<std::string>());
    raw.push_back({from, to, std::move(weight)});
  }
  return merge_parallel(vertices, raw);
}

}  // namespace

PYBIND11_MODULE(_isored, m) {
  m.doc() = "Isospectral reductions of weighted digraphs with rational-function weights";

  static py::exception<Error> base(m, "IsoredError");
  static py::exception<Error> input(m, "InputError", base.ptr());
  static py::exception<Error> precondition(m, "PreconditionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      auto& cls = is_input_error(e.kind()) ? input : precondition;
      py::object exc = py::handle(cls.ptr())(e.what());
      exc.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  py::class_<RatFun>(m, "Weight", "Rational function in lambda over Q(i), always in lowest terms")
      .def(py::init([](const std::string& text) { return parse_weight(text); }), py::arg("text"))
      .def(py::init([](long c) { return RatFun(c); }), py::arg("constant"))
      .def_static("lam", &RatFun::lambda, "The identity function lambda.")
      .def_property_readonly("numerator", [](const RatFun& w) { return format_poly(w.num()); })
      .def_property_readonly("denominator", [](const RatFun& w) { return format_poly(w.den()); })
      .def_property_readonly("pi", [](const RatFun& w) -> std::optional<int> {
        const PiDegree d = w.pi();
        if (d.is_neg_inf()) return std::nullopt;
        return d.value();
      }, "deg(num) - deg(den), or None for zero.")
      .def("is_zero", &RatFun::is_zero)
      .def("__call__", &RatFun::eval, py::arg("z"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + long())
      .def(py::self - long())
      .def(py::self * long())
      .def(py::self / long())
      .def(long() + py::self)
      .def(long() - py::self)
      .def(long() * py::self)
      .def(long() / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const RatFun& w) { return py::hash(py::str(format_weight(w))); })
      .def("__str__", &format_weight)
      .def("__repr__", [](const RatFun& w) { return "Weight('" + format_weight(w) + "')"; });
  py::implicitly_convertible<py::int_, RatFun>();

  py::class_<WeightedDigraph>(m, "Graph", "Weighted directed graph with labelled vertices")
      .def(py::init(&graph_from_edges), py::arg("vertices"), py::arg("edges"),
           "Edges are (from, to, weight) with weight a Weight, int or expression string; parallel edges add up.")
      .def_static("from_json", &parse_graph_json, py::arg("text"))
      .def_static("read", &read_graph_file, py::arg("path"))
      .def("to_json", &write_graph_json)
      .def_property_readonly("vertices", &WeightedDigraph::labels)
      .def_property_readonly("edges", [](const WeightedDigraph& g) {
        py::list out;
        for (const auto& e : g.edges()) out.append(py::make_tuple(g.label(e.from), g.label(e.to), e.weight));
        return out;
      })
      .def("weight", [](const WeightedDigraph& g, const std::string& a, const std::string& b) {
        return g.weight(g.index_of(a), g.index_of(b));
      }, py::arg("source"), py::arg("target"))
      .def("__len__", &WeightedDigraph::size)
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedDigraph& g) {
        return "<Graph with " + std::to_string(g.size()) + " vertices and " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("parse_weight", &parse_weight, py::arg("text"));
  m.def("format_weight", &format_weight, py::arg("weight"));

  m.def("reduce", [](const WeightedDigraph& g, const std::vector<std::string>& s, const std::string& method) {
    if (method != "elimination" && method != "branches") throw ParseError(0, "method must be 'elimination' or 'branches'");
    const auto idx = vertex_set(g, s);
    return reduce(g, idx, method == "branches" ? ReduceMethod::Branches : ReduceMethod::Elimination);
  }, py::arg("graph"), py::arg("vertices"), py::arg("method") = "elimination",
        "R_S(G) for the structural set given by label.");
  m.def("reduce_sequence", [](const WeightedDigraph& g, const std::vector<std::vector<std::string>>& sets) {
    auto r = sequential_reduce(g, sets);
    return py::make_tuple(r.graph, r.forbidden.points());
  }, py::arg("graph"), py::arg("sets"), "Sequential reduction; returns (graph, forbidden points).");
  m.def("reduce_to", [](const WeightedDigraph& g, const std::vector<std::string>& target,
                        std::optional<std::vector<std::string>> order) {
    auto r = unique_reduce_to(g, target, order);
    return py::make_tuple(r.graph, r.forbidden.points());
  }, py::arg("graph"), py::arg("target"), py::arg("order") = std::nullopt,
        "Unique reduction onto target for graphs whose weights all have pi <= 0.");

  m.def("forbidden_set", [](const WeightedDigraph& g, const std::vector<std::string>& s) {
    return forbidden_set(g, vertex_set(g, s)).points();
  }, py::arg("graph"), py::arg("vertices"));
  m.def("is_structural_set", [](const WeightedDigraph& g, const std::vector<std::string>& s) {
    return is_structural_set(g, vertex_set(g, s));
  }, py::arg("graph"), py::arg("vertices"));
  m.def("bas", [](const WeightedDigraph& g) { return labels_of(g, basic_structural_set(g)); }, py::arg("graph"));
  m.def("in_g_pi", &is_g_pi, py::arg("graph"));

  m.def("char_det", &char_det, py::arg("graph"), "det(M(G) - lambda I) as a Weight.");
  m.def("spectrum", [](const WeightedDigraph& g) { return spectrum_list(spectrum(g)); }, py::arg("graph"),
        "List of (root, multiplicity).");
  m.def("verify", [](const WeightedDigraph& g, const std::vector<std::string>& s,
                     std::optional<WeightedDigraph> reduced, double tol) {
    const auto idx = vertex_set(g, s);
    const ForbiddenSet n = forbidden_set(g, idx);
    const WeightedDigraph r = reduced ? *reduced : reduce(g, idx);
    const auto cmp = spectra_equal_up_to(spectrum(g), spectrum(r), n, tol);
    return py::make_tuple(cmp.equal, cmp.report());
  }, py::arg("graph"), py::arg("vertices"), py::arg("reduced") = std::nullopt, py::arg("tol") = 1e-9,
        "Compares sigma(G) and sigma(R) outside N(G; S); returns (equal, report).");

  m.def("scc", [](const WeightedDigraph& g) {
    const auto p = scc_partition(g);
    std::vector<std::vector<std::string>> out;
    for (const auto& c : p.components) out.push_back(labels_of(g, c));
    return out;
  }, py::arg("graph"), "Strongly connected components, sinks first.");
  m.def("scc_filter", &scc_filter, py::arg("graph"));
  m.def("laplacian", &laplacian, py::arg("graph"), py::arg("kind") = "comb");
  m.def("expand", [](const WeightedDigraph& g, const std::vector<std::string>& s) {
    return expand(g, vertex_set(g, s));
  }, py::arg("graph"), py::arg("vertices"));

  m.def("weightset", [](const WeightedDigraph& g, const std::string& subring) {
    const auto test = subring_test(parse_subring(subring));
    const auto w = weightset_construct(g, test);
    const auto check = verify_weightset(g, w.graph, test);
    py::dict report;
    report["ok"] = check.ok;
    report["count_ok"] = check.count_ok;
    report["subring_ok"] = check.subring_ok;
    report["equivalent"] = check.equivalent;
    report["branch_equivalent"] = check.branch_equivalent;
    report["expected_vertices"] = check.expected_vertices;
    report["actual_vertices"] = check.actual_vertices;
    report["merged"] = w.merged;
    report["report"] = check.report;
    return py::make_tuple(w.graph, report);
  }, py::arg("graph"), py::arg("subring") = "int",
        "Weight-set construction; returns (graph, check report).");

  m.def("isomorphism", &isomorphism_labels, py::arg("first"), py::arg("second"),
        "Weight-preserving isomorphism as a label map, or None.");
  m.def("bas_equivalent", &bas_equivalent, py::arg("first"), py::arg("second"));
}
