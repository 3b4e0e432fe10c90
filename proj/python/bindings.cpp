#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "incalg/cli.hpp"
#include "incalg/io.hpp"
#include "incalg/mult.hpp"
#include "incalg/oracle.hpp"

namespace py = pybind11;
using namespace incalg;

namespace {

using PairMap = std::map<std::pair<std::string, std::string>, std::string>;

PairMap entries_of(const IncidenceFunction& f) {
  PairMap out;
  const auto& p = f.preorder();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !f.ring().is_zero(f.at(x, y))) out[{p.label(x), p.label(y)}] = f.ring().format(f.at(x, y));
  return out;
}

IncidenceFunction function_from(const IncidenceAlgebra& a, const PairMap& values) {
  std::vector<IncidenceAlgebra::Entry> entries;
  for (const auto& [pair, text] : values) entries.push_back({pair.first, pair.second, a.ring().parse_element(text)});
  return a.from_entries(entries);
}

PairMap weights_of(const WeightSystem& ws) {
  PairMap out;
  const auto& g = ws.graph();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out[{g.label(g.edges()[e].lower), g.label(g.edges()[e].upper)}] = ws.ring().format(ws.edge_value(e).element());
  return out;
}

WeightSystem weights_from(const Preorder& p, const Ring& ring, const PairMap& values) {
  WeightSystem ws(make_graph(p), ring);
  const auto& q = ws.poset();
  for (const auto& [pair, text] : values)
    ws.set(q.class_index(pair.first), q.class_index(pair.second), ring.as_central_unit(ring.parse_element(text)));
  return ws;
}

std::map<std::string, std::string> potential_of(const Potential& v, const ComparabilityGraph& g, const Ring& ring) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < v.values.size(); ++i) out[g.label(i)] = ring.format(v.values[i].element());
  return out;
}

std::size_t root_index(const WeightSystem& ws, const std::optional<std::string>& root) {
  return root ? ws.poset().class_index(*root) : 0;
}

}  // namespace

PYBIND11_MODULE(_incalg, m) {
  m.doc() = "Incidence algebras over finite rings and their multiplicative automorphisms";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IncompatibleError>(m, "IncompatibleError", PyExc_ValueError);
  py::register_exception<NonUnitError>(m, "NonUnitError", PyExc_ValueError);
  py::register_exception<SupportError>(m, "SupportError", PyExc_ValueError);
  py::register_exception<ConnectivityError>(m, "ConnectivityError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<Ring>(m, "Ring")
      .def(py::init([](const std::string& spec) { return Ring::parse(spec); }), py::arg("spec"))
      .def_property_readonly("order", &Ring::order)
      .def_property_readonly("is_commutative", &Ring::is_commutative)
      .def("elements",
           [](const Ring& r) {
             std::vector<std::string> out;
             for (const auto& e : r.elements()) out.push_back(r.format(e));
             return out;
           })
      .def("central_units",
           [](const Ring& r) {
             std::vector<std::string> out;
             for (const auto& u : r.central_units()) out.push_back(r.format(u.element()));
             return out;
           })
      .def("add", [](const Ring& r, const std::string& a, const std::string& b) {
        return r.format(r.add(r.parse_element(a), r.parse_element(b)));
      })
      .def("mul", [](const Ring& r, const std::string& a, const std::string& b) {
        return r.format(r.mul(r.parse_element(a), r.parse_element(b)));
      })
      .def("inverse", [](const Ring& r, const std::string& a) { return r.format(r.inverse(r.parse_element(a))); })
      .def("is_unit", [](const Ring& r, const std::string& a) { return r.is_unit(r.parse_element(a)); })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; });

  py::class_<Preorder>(m, "Preorder")
      .def(py::init([](std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& rel) {
             return Preorder::close(std::move(elements), rel);
           }),
           py::arg("elements"), py::arg("relations") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("parse", &parse_preorder, py::arg("text"))
      .def_static("read", &read_preorder_file, py::arg("path"))
      .def_static("chain", &shapes::chain)
      .def_static("antichain", &shapes::antichain)
      .def_static("crown", &shapes::crown)
      .def_static("diamond", &shapes::diamond)
      .def_property_readonly("labels", &Preorder::labels)
      .def("__len__", &Preorder::size)
      .def("leq", [](const Preorder& p, const std::string& x, const std::string& y) { return p.leq(p.index(x), p.index(y)); })
      .def("interval", py::overload_cast<const std::string&, const std::string&>(&Preorder::interval, py::const_))
      .def("is_partial_order", &Preorder::is_partial_order)
      .def("classes",
           [](const Preorder& p) {
             QuotientPoset q(p);
             std::vector<std::vector<std::string>> out;
             for (std::size_t c = 0; c < q.size(); ++c) {
               out.emplace_back();
               for (auto e : q.members(c)) out.back().push_back(p.label(e));
             }
             return out;
           })
      .def("quotient", [](const Preorder& p) { return QuotientPoset(p).as_preorder(); })
      .def("cyclomatic_number", [](const Preorder& p) { return make_graph(p)->cyclomatic_number(); })
      .def("to_text", &write_preorder)
      .def("__eq__", [](const Preorder& a, const Preorder& b) { return a == b; });

  m.def("generate_preorders", &generate_preorders, py::arg("max_size"), py::arg("posets_only") = false);
  m.def("connected_posets", &connected_posets, py::arg("max_size"));

  py::class_<IncidenceAlgebra>(m, "Algebra")
      .def(py::init<Preorder, Ring>(), py::arg("preorder"), py::arg("ring"))
      .def_property_readonly("preorder", &IncidenceAlgebra::preorder)
      .def_property_readonly("ring", &IncidenceAlgebra::ring)
      .def("zero", &IncidenceAlgebra::zero)
      .def("delta", &IncidenceAlgebra::delta)
      .def("zeta", &IncidenceAlgebra::zeta)
      .def("function", &function_from, py::arg("entries"))
      .def("function_from_json", [](const IncidenceAlgebra& a, const std::string& text) { return read_function_json(text, a); });

  py::class_<IncidenceFunction>(m, "Function")
      .def("__getitem__",
           [](const IncidenceFunction& f, const std::pair<std::string, std::string>& xy) {
             return f.ring().format(f.at(xy.first, xy.second));
           })
      .def("entries", &entries_of)
      .def("__add__", [](const IncidenceFunction& f, const IncidenceFunction& g) { return add(f, g); })
      .def("__sub__", [](const IncidenceFunction& f, const IncidenceFunction& g) { return sub(f, g); })
      .def("__mul__", [](const IncidenceFunction& f, const IncidenceFunction& g) { return convolve(f, g); })
      .def("__eq__", [](const IncidenceFunction& f, const IncidenceFunction& g) { return f == g; })
      .def("is_unit", &is_unit)
      .def("invert", &invert)
      .def("split", [](const IncidenceFunction& f) {
        auto parts = split_LM(f);
        return py::make_tuple(parts.l, parts.m);
      })
      .def("unit_decompose", [](const IncidenceFunction& u) {
        auto d = unit_decompose(u);
        return py::make_tuple(d.d, d.v);
      })
      .def("to_json", &write_function_json);

  m.def("convolve", &convolve);
  m.def("invert", &invert);
  m.def("hadamard", &hadamard);

  py::class_<WeightSystem>(m, "WeightSystem")
      .def(py::init(&weights_from), py::arg("preorder"), py::arg("ring"), py::arg("weights") = PairMap{})
      .def_static(
          "from_json",
          [](const Preorder& p, const std::string& text) { return read_weights_json(text, make_graph(p)); },
          py::arg("preorder"), py::arg("text"))
      .def_static(
          "from_potential",
          [](const Preorder& p, const Ring& ring, const std::map<std::string, std::string>& values) {
            auto graph = make_graph(p);
            Potential v;
            for (std::size_t i = 0; i < graph->vertex_count(); ++i) {
              auto it = values.find(graph->label(i));
              if (it == values.end()) throw InputError("missing potential value for " + graph->label(i));
              v.values.push_back(ring.as_central_unit(ring.parse_element(it->second)));
            }
            return from_potential(graph, ring, v);
          },
          py::arg("preorder"), py::arg("ring"), py::arg("potential"))
      .def("weights", &weights_of)
      .def("to_json", &write_weights_json)
      .def("violations",
           [](const WeightSystem& ws) {
             std::vector<std::tuple<std::string, std::string, std::string>> out;
             for (const auto& v : validate(ws))
               out.emplace_back(ws.graph().label(v.x), ws.graph().label(v.z), ws.graph().label(v.y));
             return out;
           })
      .def("is_valid", [](const WeightSystem& ws) { return is_valid(ws); })
      .def("compose", [](const WeightSystem& a, const WeightSystem& b) { return compose(a, b); })
      .def("inverse", [](const WeightSystem& ws) { return inverse(ws); })
      .def("apply", [](const WeightSystem& ws, const IncidenceFunction& f) { return apply(ws, f); })
      .def("mult_function", [](const WeightSystem& ws) { return to_mult_function(ws); })
      .def(
          "find_potential",
          [](const WeightSystem& ws, const std::optional<std::string>& root) -> py::object {
            auto res = find_potential(ws, root_index(ws, root));
            if (const auto* v = std::get_if<Potential>(&res))
              return py::cast(potential_of(*v, ws.graph(), ws.ring()));
            return py::none();
          },
          py::arg("root") = std::nullopt)
      .def(
          "witness",
          [](const WeightSystem& ws, const std::optional<std::string>& root) -> py::object {
            auto res = find_potential(ws, root_index(ws, root));
            if (const auto* n = std::get_if<NotInner>(&res))
              return py::make_tuple(format_path(ws.graph(), n->witness.cycle.vertices),
                                    ws.ring().format(n->witness.weight.element()));
            return py::none();
          },
          py::arg("root") = std::nullopt)
      .def(
          "is_inner",
          [](const WeightSystem& ws, const std::optional<std::string>& root) {
            return is_inner_cycles(ws, spanning_tree(ws.graph(), root_index(ws, root))).inner;
          },
          py::arg("root") = std::nullopt)
      .def(
          "decompose",
          [](const WeightSystem& ws, const std::optional<std::string>& root) {
            auto d = decompose(ws, spanning_tree(ws.graph(), root_index(ws, root)));
            return py::make_tuple(d.trivial_on_tree, d.inner, potential_of(d.potential, ws.graph(), ws.ring()));
          },
          py::arg("root") = std::nullopt)
      .def("__eq__", [](const WeightSystem& a, const WeightSystem& b) { return a == b; });

  m.def(
      "enumerate_mult",
      [](const Preorder& p, const Ring& ring, std::uint64_t max_candidates, bool force) {
        EnumerationLimits limits;
        limits.max_candidates = max_candidates;
        limits.force = force;
        py::gil_scoped_release release;
        return enumerate_mult(make_graph(p), ring, limits);
      },
      py::arg("preorder"), py::arg("ring"), py::arg("max_candidates") = EnumerationLimits{}.max_candidates,
      py::arg("force") = false);
  m.def(
      "enumerate_inner",
      [](const Preorder& p, const Ring& ring) {
        py::gil_scoped_release release;
        return enumerate_inner(make_graph(p), ring);
      },
      py::arg("preorder"), py::arg("ring"));
  m.def(
      "verify_structure_json",
      [](const Preorder& p, const Ring& ring) {
        py::gil_scoped_release release;
        return write_report_json(verify_structure(make_graph(p), ring));
      },
      py::arg("preorder"), py::arg("ring"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_command(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
