#include "sextic/delpezzo.hpp"
#include "sextic/discriminants.hpp"
#include "sextic/errors.hpp"
#include "sextic/fixtures.hpp"
#include "sextic/io.hpp"
#include "sextic/tritangents.hpp"
#include "sextic/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sextic;

// Values cross the boundary as JSON text; the Python wrapper decodes them.
namespace {

std::string dump(const Json& j) { return j.dump(); }
Json load(const std::string& s) { return Json::parse(s); }

std::string py_validate(const std::string& config) {
  auto rep = validate_configuration(config_from_json(load(config)));
  return dump({{"ok", rep.ok}, {"condition", rep.condition}, {"detail", rep.detail}});
}

std::string py_census(const std::string& config, bool planes, int jobs) {
  auto p = config_from_json(load(config));
  auto rep = validate_configuration(p);
  if (!rep.ok) throw DegenerateConfiguration("invalid configuration: " + rep.condition + " (" + rep.detail + ")");
  CensusOptions o;
  o.planes = planes;
  o.jobs = jobs;
  py::gil_scoped_release release;
  return dump(census_to_json(census(p, o)));
}

std::string py_branch_curve(const std::string& basis, const std::string& method) {
  auto b = basis_from_json(load(basis));
  py::gil_scoped_release release;
  auto bc = method == "linear" ? branch_curve_linear(b.u, b.v, b.w) : branch_curve(b.u, b.v, b.w);
  return dump(branch_to_json(bc.c));
}

std::string py_sextic_basis(const std::string& config) {
  return dump(basis_to_json(integral_basis(real_sextic_basis(config_from_json(load(config))))));
}

std::string py_to_ambient(const std::string& c) { return dump(ambient_to_json(to_ambient(branch_from_json(load(c))))); }

std::string py_verify(const std::string& qk, const std::string& plane) {
  auto pair = ambient_from_json(load(qk));
  return dump(tritangency_to_json(verify_tritangent(pair.Q, pair.K, parse_plane(plane))));
}

std::string py_search(int s, int count, std::uint64_t seed, int height, int jobs) {
  py::gil_scoped_release release;
  return dump(search_to_json(search({s, height}, count, seed, jobs)));
}

std::string py_disc_degree(const std::string& kind, const std::string& role, int samples, int held_out, int jobs) {
  DiscDegreeOptions o;
  o.kind = parse_class_kind(kind);
  o.role = parse_moving_role(role);
  o.samples = samples;
  o.held_out = held_out;
  o.jobs = jobs;
  py::gil_scoped_release release;
  return dump(disc_report_to_json(disc_degree(o)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tritangent computations for genus-4 space sextics";

  static py::exception<Error> base(m, "SexticError");
  static py::exception<DegenerateConfiguration> degenerate(m, "DegenerateConfigurationError", base.ptr());
  static py::exception<GenericityFailure> genericity(m, "GenericityError", base.ptr());
  static py::exception<ResourceLimit> resource(m, "ResourceLimitError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegenerateConfiguration& e) {
      py::set_error(degenerate, e.what());
    } catch (const GenericityFailure& e) {
      py::set_error(genericity, e.what());
    } catch (const ResourceLimit& e) {
      py::set_error(resource, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const Json::exception& e) {
      py::set_error(parse, e.what());
    }
  });

  m.def("validate", &py_validate, py::arg("config"));
  m.def("census", &py_census, py::arg("config"), py::arg("planes") = false, py::arg("jobs") = 1);
  m.def("sextic_basis", &py_sextic_basis, py::arg("config"));
  m.def("branch_curve", &py_branch_curve, py::arg("basis"), py::arg("method") = "groebner");
  m.def("to_ambient", &py_to_ambient, py::arg("c"));
  m.def("verify", &py_verify, py::arg("qk"), py::arg("plane"));
  m.def("search", &py_search, py::arg("s"), py::arg("count"), py::arg("seed"), py::arg("height") = 20,
        py::arg("jobs") = 1);
  m.def("disc_degree", &py_disc_degree, py::arg("kind"), py::arg("role"), py::arg("samples") = 700,
        py::arg("held_out") = 20, py::arg("jobs") = 1);
  m.def("delta1_bidegree", &delta1_bidegree, py::arg("d"), py::arg("e"));
  m.def(
      "pullback_bidegree",
      [](long long lambda, long long delta0) { return pullback_bidegree({lambda, delta0}); },
      py::arg("lambda_coeff"), py::arg("delta0_coeff"));
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture_input", [](const std::string& name) { return dump(fixture_input(find_fixture(name))); },
        py::arg("name"));
}
