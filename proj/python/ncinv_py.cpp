#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncinv/app.hpp"
#include "ncinv/bounds.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/nagata_higman.hpp"
#include "ncinv/ncparse.hpp"
#include "ncinv/structure_algebra.hpp"
#include "ncinv/tideal.hpp"

namespace py = pybind11;
using namespace ncinv;

namespace {

constexpr std::size_t kMaxVariable = 64;

StructureAlgebra named_algebra(const std::string& name) {
  if (name == "M2") return StructureAlgebra::matrices_2x2();
  if (name == "U2") return StructureAlgebra::upper_triangular_2x2();
  if (name == "K") return StructureAlgebra::field();
  if (name.size() > 1 && name[0] == 'R') return StructureAlgebra::rk_algebra(std::stoul(name.substr(1)));
  throw UsageError("unknown algebra '" + name + "'");
}

NCPoly parse_identity(const std::string& text) {
  if (text == "s4") return standard_polynomial(4);
  return parse_ncpoly(text, kMaxVariable);
}

}  // namespace

PYBIND11_MODULE(_ncinv, m) {
  m.doc() = "Exact computations in noncommutative invariant theory";

  auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  (void)usage;

  m.def("normalize", [](const std::string& text) { return format_ncpoly(parse_ncpoly(text, kMaxVariable)); },
        py::arg("text"), "Parse a polynomial and print it in canonical form.");

  m.def("holds_in_algebra",
        [](const std::string& identity, const std::string& algebra) {
          return holds_in_algebra(parse_identity(identity), named_algebra(algebra));
        },
        py::arg("identity"), py::arg("algebra"));

  m.def("quotient_dimension",
        [](const std::vector<std::string>& identities, std::size_t d, std::size_t n, bool unitary) {
          std::vector<NCPoly> ids;
          for (const auto& s : identities) ids.push_back(parse_ncpoly(s, kMaxVariable));
          RelativelyFreeAlgebra algebra(Variety(std::move(ids), unitary), d);
          return algebra.component(n).quotient_dimension();
        },
        py::arg("identities"), py::arg("d"), py::arg("n"), py::arg("unitary") = true);

  m.def("nh_member", [](unsigned n, unsigned m_) { return nh_member(n, m_); }, py::arg("n"), py::arg("m"),
        py::call_guard<py::gil_scoped_release>());
  m.def("nu", [](unsigned n, unsigned m_max) { return nu(n, m_max); }, py::arg("n"), py::arg("m_max"),
        py::call_guard<py::gil_scoped_release>());

  m.def("power_certificate",
        [](unsigned n, unsigned m_) {
          auto cert = power_decomposition(n, m_);
          if (!cert.verify()) throw InternalError("certificate failed re-expansion");
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [c, u] : cert.terms) out.emplace_back(to_string(c), format_ncpoly(u));
          return out;
        },
        py::arg("n"), py::arg("m"), "Terms (coefficient, u) with x1...xm = sum coefficient * u^n.");

  m.def("bound_thm_3_2", [](unsigned n_r, unsigned ell, unsigned d, std::uint64_t beta_g) {
    return bound_thm_3_2(n_r, ell, d, beta_g).value;
  });
  m.def("bound_thm_3_4", [](unsigned n_r, std::uint64_t order) { return bound_thm_3_4(n_r, order).value; });

  m.def("run_task_json",
        [](const std::string& config, std::optional<unsigned> threads, std::optional<std::uint64_t> seed,
           std::optional<std::size_t> degree_cap) {
          app::Overrides o;
          o.threads = threads;
          o.seed = seed;
          o.degree_cap = degree_cap;
          app::Json parsed;
          try {
            parsed = app::Json::parse(config);
          } catch (const app::Json::parse_error& e) {
            throw UsageError(std::string("config: invalid JSON: ") + e.what());
          }
          py::gil_scoped_release release;
          return app::run_task(parsed, o).dump();
        },
        py::arg("config"), py::arg("threads") = py::none(), py::arg("seed") = py::none(),
        py::arg("degree_cap") = py::none());
}
