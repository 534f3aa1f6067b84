#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lts/bounds.hpp"
#include "lts/closure.hpp"
#include "lts/constructions.hpp"
#include "lts/errors.hpp"
#include "lts/extremal.hpp"
#include "lts/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace lts;

namespace {

py::tuple as_tuple(const Triple& t) { return py::make_tuple(t.a, t.b, t.c); }

std::vector<py::tuple> as_tuples(std::span<const Triple> ts) {
  std::vector<py::tuple> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(as_tuple(t));
  return out;
}

VertexSet as_set(const TripleSystem& sys, const std::vector<std::int64_t>& members) {
  VertexSet s(sys.n());
  for (auto v : members) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= sys.n()) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [0," +
                                                   std::to_string(sys.n()) + ")");
    }
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

py::dict verdict(const PropertyVerdict& v) {
  py::object witness = py::none();
  py::object kind = py::none();
  if (v.witness) {
    if (const auto* set = std::get_if<VertexSet>(&*v.witness)) {
      kind = py::str("vertex_set");
      witness = py::cast(set->members());
    } else {
      const auto& [first, second] = std::get<TriplePair>(*v.witness);
      kind = py::str("triple_pair");
      witness = py::make_tuple(as_tuple(first), as_tuple(second));
    }
  }
  return py::dict("holds"_a = v.holds, "witness_kind"_a = kind, "witness"_a = witness,
                  "checked_count"_a = v.checked_count);
}

template <class F>
auto released(F&& f) {
  py::gil_scoped_release release;
  return f();
}

}  // namespace

PYBIND11_MODULE(_lts, m) {
  m.doc() = "Linear triple systems: constructions, closure, spreading checks, extremal search and bounds";

  // Kept alive for the interpreter's lifetime.
  static py::handle lts_error = py::exception<Error>(m, "LtsError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.detail());
      PyErr_SetObject(lts_error.ptr(), args.ptr());
    }
  });

  py::class_<TripleSystem>(m, "TripleSystem")
      .def(py::init([](std::size_t n, const std::vector<RawTriple>& triples) { return build_system(n, triples); }),
           "n"_a, "triples"_a, "Validated linear system on vertices 0..n-1")
      .def_property_readonly("n", &TripleSystem::n)
      .def_property_readonly("triples", [](const TripleSystem& s) { return as_tuples(s.triples()); })
      .def("__len__", &TripleSystem::size)
      .def("has_triple",
           [](const TripleSystem& s, Vertex a, Vertex b, Vertex c) { return s.has_triple(Triple::sorted(a, b, c)); })
      .def("third_point", [](const TripleSystem& s, Vertex x, Vertex y) { return third_point(s, x, y); })
      .def("is_steiner", [](const TripleSystem& s) { return is_steiner(s); })
      .def("uncovered_edges", [](const TripleSystem& s) { return uncovered_edges(s); })
      .def("span", [](const TripleSystem& s) { return s.span().members(); })
      .def("serialize", [](const TripleSystem& s) { return serialize(s); })
      .def("__eq__", [](const TripleSystem& a, const TripleSystem& b) {
        return a.n() == b.n() && a.triples() == b.triples();
      })
      .def("__repr__", [](const TripleSystem& s) {
        return "TripleSystem(n=" + std::to_string(s.n()) + ", m=" + std::to_string(s.size()) + ")";
      });

  m.def("parse_system", [](const std::string& text) { return parse_system(text); }, "text"_a);
  m.def("read_system", &read_system_file, "path"_a);
  m.def("write_system", &write_system_file, "path"_a, "system"_a);

  m.def("bose_skolem", &bose_skolem, "q"_a);
  m.def("spreading_6p3", &spreading_6p3, "p"_a);
  m.def(
      "crowning",
      [](const TripleSystem& sys, std::optional<std::vector<std::size_t>> keep) {
        if (!keep) return crowning(sys);
        return crowning(sys, std::span<const std::size_t>(*keep));
      },
      "system"_a, "keep"_a = py::none());
  m.def("cayley_latin", &cayley_latin, "p"_a);
  m.def("star_expansion", &star_expansion, "m"_a);

  m.def(
      "neighbourhood",
      [](const TripleSystem& sys, const std::vector<std::int64_t>& s) {
        return neighbourhood(sys, as_set(sys, s)).members();
      },
      "system"_a, "vertices"_a);
  m.def(
      "closure",
      [](const TripleSystem& sys, const std::vector<std::int64_t>& s) {
        return closure(sys, as_set(sys, s)).members();
      },
      "system"_a, "vertices"_a);
  m.def(
      "is_spreading",
      [](const TripleSystem& sys, const std::string& mode) {
        SpreadingMode sm;
        if (mode == "reduced") {
          sm = SpreadingMode::reduced;
        } else if (mode == "brute_force" || mode == "brute-force") {
          sm = SpreadingMode::brute_force;
        } else {
          throw py::value_error("mode must be 'reduced' or 'brute_force'");
        }
        return verdict(released([&] { return is_spreading(sys, sm); }));
      },
      "system"_a, "mode"_a = "reduced");
  m.def(
      "is_weakly_spreading",
      [](const TripleSystem& sys) { return verdict(released([&] { return is_weakly_spreading(sys); })); },
      "system"_a);
  m.def(
      "is_strongly_connected",
      [](const TripleSystem& sys) { return verdict(released([&] { return is_strongly_connected(sys); })); },
      "system"_a);
  m.def(
      "expander_deficiency",
      [](const TripleSystem& sys, std::optional<std::size_t> max_size, std::uint64_t budget) {
        auto r = released([&] { return expander_deficiency(sys, max_size, budget); });
        py::object ratio = py::none();
        py::object ratio_set = py::none();
        if (r.min_ratio) {
          ratio = py::make_tuple(r.min_ratio->num, r.min_ratio->den);
          ratio_set = py::cast(r.ratio_set->members());
        }
        return py::dict("min_deficiency"_a = r.min_deficiency, "worst_set"_a = r.worst_set.members(),
                        "per_size_min_neighbourhood"_a = r.per_size_min_neighbourhood, "min_ratio"_a = ratio,
                        "ratio_set"_a = ratio_set, "max_size"_a = r.max_size, "sets_examined"_a = r.sets_examined);
      },
      "system"_a, "max_size"_a = py::none(), "budget"_a = kDefaultEnumerationBudget);

  m.def(
      "min_weakly_spreading",
      [](std::size_t n, std::optional<std::size_t> start_at, std::uint64_t budget) {
        auto r = released([&] { return min_weakly_spreading(n, start_at, budget); });
        return py::dict("n"_a = r.n, "minimum"_a = r.minimum, "witness"_a = r.witness,
                        "nodes_explored"_a = r.nodes_explored, "exhaustive_below"_a = r.exhaustive_below);
      },
      "n"_a, "start_at"_a = py::none(), "budget"_a = kDefaultSearchBudget);
  m.def(
      "ordering_witness",
      [](const TripleSystem& sys) -> py::object {
        auto o = ordering_witness(sys);
        if (!o) return py::none();
        return py::cast(as_tuples(o->sequence));
      },
      "system"_a);

  m.def(
      "sumset",
      [](std::uint32_t modulus, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        return sumset(ResidueSet(modulus, a), ResidueSet(modulus, b)).members();
      },
      "modulus"_a, "a"_a, "b"_a);
  m.def(
      "restricted_sumset",
      [](std::uint32_t modulus, const std::vector<std::uint32_t>& a) {
        return restricted_sumset(ResidueSet(modulus, a)).members();
      },
      "modulus"_a, "a"_a);
  m.def("average_value_ratio", &average_value_ratio, "z"_a);
  m.def(
      "tau",
      [](double tolerance) {
        auto t = tau(tolerance);
        return py::dict("argmax_z"_a = t.argmax_z, "tau"_a = t.tau);
      },
      "tolerance"_a = 1e-8);
  m.def(
      "lower_bound_constants",
      [](double t) {
        auto c = lower_bound_constants(t);
        return py::dict("edge_bound_coeff"_a = c.edge_bound_coeff, "xi_sp_coeff"_a = c.xi_sp_coeff,
                        "naive_coeff"_a = c.naive_coeff);
      },
      "tau"_a);
  m.def(
      "construction_density",
      [](std::uint32_t p) {
        auto d = construction_density(p);
        return py::dict("n"_a = d.n, "m"_a = d.m, "ratio"_a = d.ratio);
      },
      "p"_a);
}
