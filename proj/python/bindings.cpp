#include <cmath>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emptri/diamond.hpp"
#include "emptri/epts.hpp"
#include "emptri/experiments.hpp"
#include "emptri/horton.hpp"
#include "emptri/lattice.hpp"
#include "emptri/squared_horton.hpp"
#include "emptri/triangles.hpp"

namespace py = pybind11;
using namespace emptri;

namespace {

using Tri = std::tuple<std::size_t, std::size_t, std::size_t>;

std::vector<TriangleRef> to_refs(const std::vector<Tri>& tris) {
  std::vector<TriangleRef> out;
  out.reserve(tris.size());
  for (const auto& [i, j, k] : tris) out.push_back({i, j, k});
  return out;
}

std::vector<Tri> from_refs(const std::vector<TriangleRef>& tris) {
  std::vector<Tri> out;
  out.reserve(tris.size());
  for (const auto& t : tris) out.emplace_back(t.i, t.j, t.k);
  return out;
}

Rational rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw py::value_error("not a rational: " + s);
  q.canonicalize();
  return q;
}

py::dict check_dict(const CheckResult& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["witness"] = r.witness;
  d["detail"] = r.detail;
  return d;
}

py::dict validation_dict(const ValidationReport& r) {
  py::dict checks;
  for (const auto& [name, c] : r.checks) checks[py::str(name)] = check_dict(c);
  py::dict facts;
  for (const auto& [k, v] : r.facts) facts[py::str(k)] = v;
  py::dict d;
  d["ok"] = r.ok();
  d["checks"] = checks;
  d["facts"] = facts;
  return d;
}

ValidationMode mode_of(const std::string& mode, std::uint64_t seed, std::uint64_t trials) {
  if (mode == "full") return ValidationMode::full();
  if (mode == "sampled") return ValidationMode::sampled(seed, trials);
  throw py::value_error("mode must be 'full' or 'sampled'");
}

py::dict estimate_dict(const StabEstimate& e) {
  py::dict d;
  d["count"] = e.count;
  d["point"] = py::make_tuple(e.point.x.get_str(), e.point.y.get_str());
  d["exact"] = e.exact;
  d["candidates"] = e.candidates;
  d["local_rounds"] = e.local_rounds;
  d["sampled"] = e.sampled;
  return d;
}

}  // namespace

PYBIND11_MODULE(_emptri, m) {
  m.doc() = "Exact empty-triangle analytics for Horton-type point sets";
  m.attr("__version__") = kToolVersion;

  py::register_exception<GeneralPositionError>(m, "GeneralPositionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>& pts) {
             PointSet s;
             for (const auto& [x, y] : pts) s.points.emplace_back(rational(x), rational(y));
             s.validate();
             return s;
           }),
           py::arg("points"), "Raw point set from (x, y) rational strings.")
      .def("__len__", &PointSet::size)
      .def_property_readonly("family", [](const PointSet& s) { return family_name(s.family); })
      .def_property_readonly("params", [](const PointSet& s) { return s.params; })
      .def_property_readonly("diamond_id", [](const PointSet& s) { return s.diamond_id; })
      .def_property_readonly("points",
                             [](const PointSet& s) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& p : s.points) out.emplace_back(p.x.get_str(), p.y.get_str());
                               return out;
                             })
      .def("to_epts", &to_epts)
      .def_static("from_epts", &parse_epts, py::arg("text"));

  m.def("generate_horton", &generate_horton, py::arg("k"));
  m.def(
      "generate_squared_horton",
      [](int g, const std::string& mode, std::uint64_t seed, std::uint64_t trials) {
        return generate_squared_horton(g, mode_of(mode, seed, trials)).set;
      },
      py::arg("g"), py::arg("mode") = "full", py::arg("seed") = 1, py::arg("trials") = 1000000);
  m.def(
      "generate_diamond_squared_horton",
      [](std::size_t mm, int k) { return generate_diamond_squared_horton(mm, k).set; }, py::arg("m"),
      py::arg("k"));

  m.def("is_horton", &is_horton, py::arg("points"));
  m.def("check_horton", [](const PointSet& s) { return check_dict(check_horton(s.points)); }, py::arg("points"));
  m.def("check_general_position", [](const PointSet& s) { return check_dict(check_general_position(s)); },
        py::arg("points"));
  m.def(
      "visible_edges",
      [](const PointSet& s, bool structural) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : structural ? visible_edges_structural(s) : visible_edges_geometric(s))
          out.emplace_back(e.i, e.j);
        return out;
      },
      py::arg("points"), py::arg("structural") = false);

  m.def(
      "validate_squared_horton",
      [](const PointSet& s, const std::string& mode, std::uint64_t seed, std::uint64_t trials) {
        const int g = s.params.count("g") ? std::stoi(s.params.at("g"))
                                          : static_cast<int>(std::lround(std::sqrt(static_cast<double>(s.size()))));
        return validation_dict(validate_squared_horton(s, reconstruct_perturbation_map(s, g), mode_of(mode, seed, trials)));
      },
      py::arg("points"), py::arg("mode") = "full", py::arg("seed") = 1, py::arg("trials") = 1000000);
  m.def(
      "validate_diamond_properties",
      [](const PointSet& s, const std::string& mode, std::uint64_t seed, std::uint64_t trials) {
        return validation_dict(validate_diamond_properties(s, reconstruct_diamond_index(s), mode_of(mode, seed, trials)));
      },
      py::arg("points"), py::arg("mode") = "full", py::arg("seed") = 1, py::arg("trials") = 4000);

  m.def(
      "empty_triangles",
      [](const PointSet& s, std::optional<std::uint64_t> budget) {
        const auto e = empty_triangles_fast(s, budget.value_or(std::numeric_limits<std::uint64_t>::max()));
        return py::make_tuple(from_refs(e.triangles), e.truncated);
      },
      py::arg("points"), py::arg("budget") = py::none(),
      "Returns (triangles, truncated); triangles are sorted (i, j, k) index triples.");
  m.def(
      "empty_triangles_bruteforce", [](const PointSet& s) { return from_refs(empty_triangles_bruteforce(s)); },
      py::arg("points"));
  m.def(
      "stab_count",
      [](const PointSet& s, const std::string& x, const std::string& y, const std::vector<Tri>& tris) {
        return stab_count(s, ExactPoint(rational(x), rational(y)), to_refs(tris));
      },
      py::arg("points"), py::arg("x"), py::arg("y"), py::arg("triangles"));
  m.def(
      "incidence_counts",
      [](const PointSet& s, const std::vector<Tri>& tris) { return incidence_counts(s.size(), to_refs(tris)); },
      py::arg("points"), py::arg("triangles"));
  m.def(
      "max_stab_candidates",
      [](const PointSet& s, const std::vector<Tri>& tris, const std::string& strategies, std::uint64_t seed,
         std::optional<std::uint64_t> max_centroids) {
        CandidateOptions o;
        o.strategies = parse_strategies(strategies);
        o.seed = seed;
        if (max_centroids) o.max_centroids = *max_centroids;
        return estimate_dict(max_stab_candidates(s, to_refs(tris), o));
      },
      py::arg("points"), py::arg("triangles"), py::arg("strategies") = "a+b+d", py::arg("seed") = 1,
      py::arg("max_centroids") = py::none());
  m.def(
      "max_stab_exact_small",
      [](const PointSet& s, const std::vector<Tri>& tris) { return estimate_dict(max_stab_exact_small(s, to_refs(tris))); },
      py::arg("points"), py::arg("triangles"));

  m.def(
      "totient_sum",
      [](std::uint64_t n) {
        const TotientSum t = totient_sum(n);
        py::dict d;
        d["value"] = static_cast<double>(t.value);
        d["ratio"] = static_cast<double>(t.ratio);
        d["ratio_upper"] = static_cast<double>(t.ratio_upper);
        return d;
      },
      py::arg("n"));
  m.def(
      "triangle_height",
      [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b,
         std::pair<std::int64_t, std::int64_t> c) {
        const GridTriangle t{{a.first, a.second}, {b.first, b.second}, {c.first, c.second}};
        const auto h = triangle_height(t);
        return py::make_tuple(h.height, h.base_edge);
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "verify_report",
      [](const std::string& check, const PointSet* s, int k, int g, std::uint64_t n, std::uint64_t seed) {
        VerifyConfig c;
        c.check = check;
        c.k = k;
        c.g = g;
        c.n = n;
        c.seed = seed;
        const Verified v = run_verify(c, s);
        return py::make_tuple(v.ok, v.report.text());
      },
      py::arg("check"), py::arg("points") = nullptr, py::arg("k") = 0, py::arg("g") = 0, py::arg("n") = 0,
      py::arg("seed") = 1, "Returns (ok, report text) for a named check.");
  m.def(
      "analyze_report",
      [](const PointSet& s, const std::string& strategies, std::uint64_t seed, std::uint64_t max_centroids) {
        AnalyzeConfig c;
        c.strategies = parse_strategies(strategies);
        c.seed = seed;
        c.max_centroids = max_centroids;
        return run_analyze(s, c).report.text();
      },
      py::arg("points"), py::arg("strategies") = "a+b+d", py::arg("seed") = 1, py::arg("max_centroids") = 65536);
}
