#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wgalg/cli.hpp"
#include "wgalg/decomp.hpp"
#include "wgalg/error.hpp"
#include "wgalg/tensor.hpp"

namespace py = pybind11;
using namespace wgalg;

namespace {

CoxeterPtr system_of(const std::string& text) {
  return std::make_shared<const CoxeterSystem>(parse_coxeter(text));
}

// Keeps the context and its system alive together.
class PyOmega {
 public:
  PyOmega(const std::string& coxeter, int max_len, bool table, const std::string& source) {
    ContextOptions o;
    o.bound = max_len;
    o.build_table = table;
    o.source = parse_relation_source(source);
    ctx_ = std::make_unique<OmegaContext>(system_of(coxeter), o);
  }

  OmegaElement parse(const std::string& expr) const {
    return parse_omega(expr, ctx_->expr_context());
  }
  std::string reduce(const std::string& expr) const {
    return ctx_->reduce(parse(expr)).to_string(ctx_->system());
  }
  std::string verdict(const std::string& expr) const { return verdict_name(ctx_->verdict(parse(expr))); }
  py::object dimension() const {
    if (const CertifiedTable* T = ctx_->table()) return py::int_(T->dimension());
    return py::none();
  }
  std::vector<std::string> basis() const {
    std::vector<std::string> out;
    if (const CertifiedTable* T = ctx_->table()) {
      for (const Path& p : T->basis()) out.push_back(path_to_string(p, ctx_->system()));
    }
    return out;
  }
  std::string name() const { return ctx_->system().name(); }
  const OmegaContext& context() const { return *ctx_; }

 private:
  std::unique_ptr<OmegaContext> ctx_;
};

Certificate load_certificate(const PyOmega& omega, const std::string& cert) {
  if (cert == "builtin") return builtin_certificate(omega.context().system_ptr());
  return certificate_from_json_text(cert, omega.context().system_ptr());
}

}  // namespace

PYBIND11_MODULE(_wgalg, m) {
  m.doc() = "Exact computations in W-graph algebras";

  static py::exception<Error> base(m, "WgalgError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<BoundError> bound_error(m, "BoundError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const BoundError& e) {
      py::set_error(bound_error, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("group_order", [](const std::string& coxeter) { return CoxeterGroup(system_of(coxeter)).size(); },
        py::arg("coxeter"));
  m.def("quiver_dot", [](const std::string& coxeter) { return Quiver(system_of(coxeter)).to_dot(); },
        py::arg("coxeter"));
  m.def("relations",
        [](const std::string& coxeter, const std::string& source) {
          auto W = system_of(coxeter);
          return relation_dump(relations(Quiver(W), parse_relation_source(source)), *W);
        },
        py::arg("coxeter"), py::arg("source") = "closed-form");

  py::class_<PyOmega>(m, "Omega")
      .def(py::init<const std::string&, int, bool, const std::string&>(), py::arg("coxeter"),
           py::arg("max_len") = 6, py::arg("table") = true, py::arg("source") = "closed-form")
      .def_property_readonly("name", &PyOmega::name)
      .def_property_readonly("dimension", &PyOmega::dimension)
      .def_property_readonly("basis", &PyOmega::basis)
      .def("reduce", &PyOmega::reduce, py::arg("expr"))
      .def("verdict", &PyOmega::verdict, py::arg("expr"))
      .def("__repr__", [](const PyOmega& o) { return "<Omega " + o.name() + ">"; });

  m.def("verify_certificate",
        [](const PyOmega& omega, const std::string& cert) {
          const Certificate c = load_certificate(omega, cert);
          Report r = verify_certificate(omega.context(), c);
          r.checks.push_back(filtration_check(omega.context(), c));
          return r.to_json_text();
        },
        py::arg("omega"), py::arg("certificate") = "builtin",
        "Report JSON; `certificate` is certificate JSON or \"builtin\".");
  m.def("search_certificate",
        [](const PyOmega& omega) -> py::object {
          const SearchResult s = search_certificate(omega.context());
          if (!s.certificate) return py::none();
          return py::str(certificate_to_json_text(*s.certificate));
        },
        py::arg("omega"));

  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
