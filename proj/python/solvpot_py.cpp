#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <random>

#include "solvpot/bose.hpp"
#include "solvpot/coordmap.hpp"
#include "solvpot/errors.hpp"
#include "solvpot/families.hpp"
#include "solvpot/params.hpp"
#include "solvpot/spec_io.hpp"
#include "solvpot/verify.hpp"

namespace py = pybind11;
using namespace solvpot;

namespace {

FamilyKind to_kind(const std::string& name) { return kind_from_name(name); }

FamilySpec make_spec(const std::string& kind, const std::map<std::string, double, std::less<>>& params) {
  return FamilySpec::from_named(to_kind(kind), params);
}

py::dict spec_params(const FamilySpec& spec) {
  py::dict d;
  const auto names = parameter_names(spec.kind());
  for (std::size_t i = 0; i < names.size(); ++i) d[py::str(std::string(names[i]))] = spec.params()[i];
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["check_name"] = r.check_name;
  d["samples"] = r.samples;
  d["max_abs_residual"] = r.max_abs_residual;
  d["max_rel_residual"] = r.max_rel_residual;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  d["notes"] = r.notes;
  return d;
}

py::dict map_dict(const CoordinateMap& map) {
  std::vector<double> x, y, dy;
  for (const auto& s : map.samples()) {
    x.push_back(s.x);
    y.push_back(s.y);
    dy.push_back(s.dy);
  }
  py::dict d;
  d["x"] = x;
  d["y"] = y;
  d["dy"] = dy;
  d["branch"] = map.branch();
  d["truncated"] = map.truncated();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exactly solvable potentials: closed forms, Bose split, coordinate maps and checks.";

  auto error = py::register_exception<Error>(m, "SolvpotError");
  py::register_exception<NearPole>(m, "NearPole", error.ptr());
  py::register_exception<InvalidSpec>(m, "InvalidSpec", error.ptr());
  py::register_exception<OutOfDomain>(m, "OutOfDomain", error.ptr());
  py::register_exception<BadStart>(m, "BadStart", error.ptr());
  py::register_exception<StalledMap>(m, "StalledMap", error.ptr());
  py::register_exception<NotCollapsible>(m, "NotCollapsible", error.ptr());
  py::register_exception<NotConverged>(m, "NotConverged", error.ptr());

  py::class_<FamilySpec>(m, "FamilySpec")
      .def(py::init(&make_spec), py::arg("kind"), py::arg("params"))
      .def_property_readonly("kind", [](const FamilySpec& s) { return std::string(kind_name(s.kind())); })
      .def_property_readonly("params", &spec_params)
      .def("__getitem__", [](const FamilySpec& s, const std::string& name) { return s[name]; })
      .def("singular_points", &FamilySpec::singular_points)
      .def("to_json", [](const FamilySpec& s) { return spec_to_json(s); })
      .def_static("from_json", &spec_from_json)
      .def("__eq__", [](const FamilySpec& a, const FamilySpec& b) { return a == b; })
      .def("__repr__", [](const FamilySpec& s) { return "FamilySpec(" + spec_to_json(s, -1) + ")"; });

  m.def("kinds", [] {
    std::vector<std::string> out;
    for (FamilyKind k : kAllKinds) out.emplace_back(kind_name(k));
    return out;
  });
  m.def("template_spec", [](const std::string& kind) { return template_spec(to_kind(kind)); });
  m.def("random_spec", [](const std::string& kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_spec(to_kind(kind), rng);
  }, py::arg("kind"), py::arg("seed") = 1);

  m.def("potential", &potential_closed_form, py::arg("spec"), py::arg("y"), py::arg("guard") = kSingularGuard);
  m.def("master_potential", py::overload_cast<const FamilySpec&, double>(&milson_potential));
  m.def("half_schwarzian", py::overload_cast<const FamilySpec&, double>(&half_schwarzian));
  m.def("j_value", py::overload_cast<const FamilySpec&, double, double>(&j_value), py::arg("spec"),
        py::arg("k"), py::arg("y"));
  m.def("bose_split", [](const FamilySpec& spec, double y) {
    const auto d = decompose(spec);
    return std::pair{d.i1(y), d.i0(y)};
  });

  m.def("solve_map", [](const FamilySpec& spec, double x0, double y0, int branch, double x_end, double step) {
    return map_dict(solve_map(spec, x0, y0, branch, x_end, step));
  }, py::arg("spec"), py::arg("x0"), py::arg("y0"), py::arg("branch"), py::arg("x_end"), py::arg("step") = 1e-3);
  m.def("cosh2_map", [](double alpha, double x) { return closed_form_map(Cosh2Map{alpha}, x).y; });
  m.def("expshift_map", [](double c, double kappa, int sign, double x) {
    return closed_form_map(ExpShiftMap{c, kappa, sign}, x).y;
  });
  m.def("logistic_map", [](double y0, double x) { return closed_form_map(LogisticMap{y0}, x).y; });

  m.def("hypergeometric_params", [](const FamilySpec& spec, double k) {
    const auto t = hypergeometric_params(spec, k);
    return std::tuple{t.a, t.b, t.c};
  });
  m.def("class_constraint_residual", [](const FamilySpec& spec, std::complex<double> a, std::complex<double> b,
                                        std::complex<double> c, double k) {
    return class_constraint_residual(spec, {a, b, c}, k);
  });
  m.def("embed_iwata_to_natanzon", &embed_iwata_to_natanzon);
  m.def("embed_natanzon_to_heun", &embed_natanzon_to_heun);
  m.def("embed_iwata_to_heun", &embed_iwata_to_heun);
  m.def("coincidence_check", &coincidence_check);

  m.def("check_decomposition", [](const FamilySpec& spec, const std::vector<double>& ys,
                                  const std::vector<double>& ks, double tol) {
    return report_dict(check_decomposition(spec, ys, ks, tol));
  }, py::arg("spec"), py::arg("y"), py::arg("k"), py::arg("tolerance") = 1e-9);
  m.def("check_master_vs_closed", [](const FamilySpec& spec, const std::vector<double>& ys, double tol) {
    return report_dict(check_master_vs_closed(spec, ys, tol));
  }, py::arg("spec"), py::arg("y"), py::arg("tolerance") = 1e-9);
  m.def("symmetry_coefficients", [](double rho, double sigma, double rho1, double sigma1) {
    const auto c = symmetry_coefficients(rho, sigma, rho1, sigma1);
    return std::pair{std::vector<double>(c.a.begin(), c.a.end()), std::vector<double>(c.b.begin(), c.b.end())};
  });
  m.def("fine_system_search", [](std::size_t draws, std::uint64_t seed) {
    const auto r = fine_system_search(draws, seed);
    return std::tuple{r.draws, r.solutions, r.solutions_outside_ball};
  }, py::arg("draws"), py::arg("seed") = 1);
  m.def("schrodinger_residual_cosh2", [](const FamilySpec& spec, double k, double alpha, double x_min, double x_max,
                                         double fd_step) {
    const auto map = sample_closed_form(Cosh2Map{alpha}, x_min, x_max, fd_step);
    return report_dict(schrodinger_residual(spec, k, map, fd_step));
  }, py::arg("spec"), py::arg("k"), py::arg("alpha"), py::arg("x_min"), py::arg("x_max"), py::arg("fd_step") = 1e-3);
  m.def("numerov_eigenvalues", [](double x0, double step, const std::vector<double>& values, int count) {
    return numerov_eigenvalues(PotentialTable{x0, step, values}, count);
  }, py::arg("x0"), py::arg("step"), py::arg("values"), py::arg("count"));
}
