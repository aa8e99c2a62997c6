#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liecontract/catalog.hpp"
#include "liecontract/cli.hpp"

namespace py = pybind11;
using namespace liecontract;

namespace {

struct Session {
  std::string dir;
  std::vector<CatalogEntry> entries;
  CatalogContext ctx = CatalogContext::build();

  explicit Session(std::string d) : dir(d.empty() ? default_data_dir() : std::move(d)), entries(load_catalog(dir)) {}

  const ContractionMatrix& matrix(const std::string& id) const {
    const CatalogEntry* e = find_entry(entries, id);
    if (!e) e = find_entry(entries, "eps_" + id);
    if (!e) throw py::key_error("unknown solution " + id);
    return e->record.matrix;
  }

  Matrix concrete(const std::string& id, const std::map<std::string, std::string>& values) const {
    const auto& eps = matrix(id);
    Bindings b = default_bindings(eps.params);
    for (const auto& [k, v] : values) {
      if (k.size() != 1) throw py::value_error("parameter names are single letters");
      b[k[0]] = CycloNumber::parse(v);
    }
    return instantiate_any(eps, b, ctx.system);
  }
};

py::dict fingerprint_dict(const Fingerprint& f) {
  py::dict d;
  d["dim"] = f.dim;
  d["derived"] = f.derived_dims;
  d["lower_central"] = f.lower_central_dims;
  d["upper_central"] = f.upper_central_dims;
  d["dim_der"] = f.dim_der;
  d["tau"] = f.tau;
  d["center"] = f.center_dim;
  d["solvable"] = f.solvable;
  d["nilpotent"] = f.nilpotent;
  d["semisimple"] = f.semisimple;
  d["tower"] = f.der_tower;
  d["text"] = f.str();
  return d;
}

Bindings to_bindings(const std::map<std::string, std::string>& values) {
  Bindings b;
  for (const auto& [k, v] : values) b[k.at(0)] = CycloNumber::parse(v);
  return b;
}

}  // namespace

PYBIND11_MODULE(_liecontract, m) {
  m.doc() = "Graded contractions of the Pauli-graded sl(3)";

  // later registrations take precedence, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BindingError>(m, "BindingError", PyExc_ValueError);
  py::register_exception<NotASolution>(m, "NotASolution", PyExc_ValueError);

  py::class_<CycloNumber>(m, "CycloNumber")
      .def(py::init([](long v, int order) { return CycloNumber(order, v); }), py::arg("value") = 0, py::arg("order") = 3)
      .def_static("parse", &CycloNumber::parse, py::arg("text"), py::arg("order") = 3)
      .def_static("root_power", &CycloNumber::root_power)
      .def_property_readonly("order", &CycloNumber::order)
      .def("coeffs", [](const CycloNumber& x) {
        std::vector<std::string> out;
        for (const auto& c : x.coeffs()) out.push_back(rational_str(c));
        return out;
      })
      .def("inverse", &CycloNumber::inverse)
      .def("conj", &CycloNumber::conj)
      .def("is_zero", &CycloNumber::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__hash__", &CycloNumber::hash)
      .def("__str__", &CycloNumber::str)
      .def("__repr__", [](const CycloNumber& x) { return "CycloNumber('" + x.str() + "', order=" + std::to_string(x.order()) + ")"; });

  m.def("generate_system", [](int n) {
    std::vector<std::string> out;
    for (const auto& e : generate_system(n)) out.push_back(e.str(n));
    return out;
  }, py::arg("n") = 3, "equations of the contraction system as text");

  m.def("generate_identities", [] {
    std::vector<std::string> out;
    for (const auto& r : generate_identities()) out.push_back(r.str());
    return out;
  });

  m.def("default_data_dir", &default_data_dir);

  py::class_<Session>(m, "Catalog")
      .def(py::init<std::string>(), py::arg("data_dir") = "")
      .def_property_readonly("data_dir", [](const Session& s) { return s.dir; })
      .def("ids", [](const Session& s) {
        std::vector<std::string> out;
        for (const auto& e : s.entries) out.push_back(e.id());
        return out;
      })
      .def("nu_histogram", [](const Session& s) { return nu_histogram(s.entries); })
      .def("params", [](const Session& s, const std::string& id) {
        std::string out;
        for (char p : s.matrix(id).params) out += p;
        return out;
      })
      .def("verify", [](const Session& s, const std::string& id, const std::map<std::string, std::string>& b) {
        return check_solution(s.concrete(id, b), s.ctx.system).ok;
      }, py::arg("id"), py::arg("bindings") = std::map<std::string, std::string>{})
      .def("classify", [](const Session& s, const std::string& id, const std::map<std::string, std::string>& b) {
        auto v = classify_continuity(s.concrete(id, b), s.ctx.system, s.ctx.identities, s.ctx.lattice);
        py::dict d;
        d["kind"] = continuity_str(v.kind);
        std::vector<std::string> w;
        for (const auto& x : v.weights) w.push_back(x.get_str());
        d["weights"] = w;
        d["identity"] = v.identity ? py::cast(s.ctx.identities[*v.identity].str()) : py::none();
        return d;
      }, py::arg("id"), py::arg("bindings") = std::map<std::string, std::string>{})
      .def("equivalent", [](const Session& s, const std::string& a, const std::string& b) {
        return equivalent(s.concrete(a, {}), s.concrete(b, {}), s.ctx.system, s.ctx.lattice, s.ctx.group).equivalent;
      })
      .def("contract", [](const Session& s, const std::string& id, const std::map<std::string, std::string>& b) {
        return apply_contraction(s.ctx.pauli, s.concrete(id, b)).dump();
      }, py::arg("id"), py::arg("bindings") = std::map<std::string, std::string>{})
      .def("identify", [](const Session& s, const std::string& id, const std::map<std::string, std::string>& b,
                          bool core, int tower_depth) {
        LieAlgebra L = apply_contraction(s.ctx.pauli, s.concrete(id, b));
        if (core) L = split_central(L).core;
        return fingerprint_dict(fingerprint(L, {tower_depth, 1}));
      }, py::arg("id"), py::arg("bindings") = std::map<std::string, std::string>{}, py::arg("core") = false,
         py::arg("tower_depth") = 1)
      .def("verify_all", [](const Session& s, uint64_t seed, int jobs, bool expected) {
        CatalogOptions opt{seed, jobs, expected, false};
        CatalogSummary sum;
        {
          py::gil_scoped_release release;
          sum = verify_catalog(s.dir, opt);
        }
        py::dict d;
        d["ok"] = sum.ok();
        d["appendix"] = py::make_tuple(sum.appendix_pass, sum.appendix_total);
        d["section6"] = py::make_tuple(sum.section6_pass, sum.section6_total);
        d["expected"] = py::make_tuple(sum.expected_pass, sum.expected_total);
        d["report"] = render_report(sum, opt);
        return d;
      }, py::arg("seed") = 1, py::arg("jobs") = 1, py::arg("expected") = true);

  m.def("identify_brackets", [](const std::string& brackets, int dim, const std::map<std::string, std::string>& b,
                                int tower_depth) {
    return fingerprint_dict(fingerprint(algebra_from_text(brackets, dim, to_bindings(b)), {tower_depth, 1}));
  }, py::arg("brackets"), py::arg("dim"), py::arg("bindings") = std::map<std::string, std::string>{},
     py::arg("tower_depth") = 1);

  m.def("verify_casimir", [](const std::string& brackets, int dim, const std::string& poly,
                             const std::map<std::string, std::string>& b) {
    Bindings bb = to_bindings(b);
    return verify_casimir(algebra_from_text(brackets, dim, bb), Polynomial::parse(poly, dim, bb)).ok;
  }, py::arg("brackets"), py::arg("dim"), py::arg("polynomial"),
     py::arg("bindings") = std::map<std::string, std::string>{});

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "run the command-line tool in-process; returns (exit code, stdout, stderr)");
}
