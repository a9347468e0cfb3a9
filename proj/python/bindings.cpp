#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socmod/artinian.hpp"
#include "socmod/errors.hpp"
#include "socmod/module_ops.hpp"
#include "socmod/session.hpp"
#include "socmod/theorems.hpp"

namespace py = pybind11;
using namespace socmod;

namespace {

Field field_of(const py::object& f) {
  if (f.is_none()) return Field::rationals();
  if (py::isinstance<py::str>(f)) {
    auto s = f.cast<std::string>();
    if (s == "qq" || s == "QQ") return Field::rationals();
    throw py::value_error("field must be 'qq' or a prime");
  }
  return Field::prime(f.cast<std::uint32_t>());
}

std::vector<Poly> parse_all(const Ring& r, const std::vector<std::string>& text) {
  std::vector<Poly> out;
  for (const auto& t : text) out.push_back(r->parse(t));
  return out;
}

std::vector<std::string> gens_text(const Submodule& n) {
  std::vector<std::string> out;
  for (const auto& g : n.generators()) out.push_back(n.is_ideal() ? g[0].to_string() : g.to_string());
  return out;
}

std::string claim(const ClaimReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_socmod, m) {
  m.doc() = "Socle modules, reductions and perfect matrices over local rings";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<LocalRing, std::shared_ptr<LocalRing>>(m, "Ring")
      .def(py::init([](std::vector<std::string> vars, std::vector<std::string> relations, bool cm,
                       py::object field) {
             return std::const_pointer_cast<LocalRing>(make_ring(field_of(field), vars, relations, cm));
           }),
           py::arg("vars"), py::arg("relations") = std::vector<std::string>{}, py::arg("cm") = false,
           py::arg("field") = py::none())
      .def_property_readonly("nvars", &LocalRing::nvars)
      .def_property_readonly("regular", &LocalRing::is_regular_presentation)
      .def("__repr__", &LocalRing::to_string);

  py::class_<Submodule, std::shared_ptr<Submodule>>(m, "Module")
      .def_property_readonly("rank", &Submodule::rank)
      .def_property_readonly("generators", [](const Submodule& n) { return gens_text(n); })
      .def("__repr__", &Submodule::to_string);

  auto mod = [](Module p) { return std::const_pointer_cast<Submodule>(p); };
  auto cmod = [](const std::shared_ptr<Submodule>& p) { return Module(p); };
  auto ring_of = [](const std::shared_ptr<LocalRing>& r) { return Ring(r); };

  m.def("ideal", [=](const std::shared_ptr<LocalRing>& r, std::vector<std::string> gens) {
    Ring ring = ring_of(r);
    return mod(make_ideal(ring, parse_all(ring, gens)));
  });
  m.def("from_columns", [=](const std::shared_ptr<LocalRing>& r, std::vector<std::vector<std::string>> rows) {
    Ring ring = ring_of(r);
    std::vector<std::vector<Poly>> e;
    for (const auto& row : rows) e.push_back(parse_all(ring, row));
    return mod(columns_to_module(PolyMatrix(ring, e)));
  });

  m.def("colength", [](const Submodule& n) { return colength(n); });
  m.def("mingens", [](const Submodule& n) { return mingens(n); });
  m.def("soc_dim", [](const Submodule& n) { return soc_dim(n); });
  m.def("socle_colon", [=](const Submodule& n) { return mod(colon_socle_trunc(n)); });
  m.def("same_module", [](const Submodule& u, const Submodule& v) { return subspace_equal(u, v); });

  m.def("_check_rn1", [=](const std::shared_ptr<Submodule>& n) { return claim(check_rn1(cmod(n))); });
  m.def("_check_prop23", [=](const std::shared_ptr<Submodule>& n, int samples, unsigned seed) {
    return claim(check_prop23(cmod(n), samples, seed));
  }, py::arg("n"), py::arg("samples") = 8, py::arg("seed") = 1);
  m.def("_check_cor25", [=](const std::shared_ptr<Submodule>& n) { return claim(check_cor25(cmod(n))); });
  m.def("_check_socle_multiplier",
        [=](const std::shared_ptr<Submodule>& n) { return claim(check_socle_multiplier(cmod(n))); });
  m.def("_check_closed", [=](const std::shared_ptr<Submodule>& n) { return claim(check_integrally_closed(cmod(n))); });
  m.def("_check_rees_cm", [=](const std::shared_ptr<Submodule>& n) { return claim(check_rees_cm(cmod(n))); });
  m.def("_theorem51", [=](const std::shared_ptr<Submodule>& n) { return claim(theorem51_report(cmod(n))); });
  m.def("_dual_image", [=](const std::shared_ptr<LocalRing>& r, std::vector<std::string> gens) {
    Ring ring = ring_of(r);
    return claim(cor53_report(ring, parse_all(ring, gens)));
  });

  m.def("_run_text", [](const std::string& text, int trunc_cap, unsigned seed, bool deterministic) {
    SessionConfig cfg;
    cfg.trunc_cap = trunc_cap;
    cfg.seed = seed;
    cfg.deterministic = deterministic;
    RunResult r = run_text(text, cfg);
    nlohmann::json out{{"reports", r.reports}, {"exit_code", r.exit_code}, {"parse_error", r.parse_error}};
    return out.dump();
  }, py::arg("text"), py::arg("trunc_cap") = 64, py::arg("seed") = 1, py::arg("deterministic") = false);
  m.def("corpus", [] { return bundled_corpus(); });
}
