#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "rbd/cli.hpp"
#include "rbd/error.hpp"
#include "rbd/hj.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/quotients.hpp"
#include "rbd/report.hpp"
#include "rbd/singularities.hpp"
#include "rbd/smoothing.hpp"
#include "rbd/surfaces.hpp"
#include "rbd/surgery.hpp"
#include "rbd/verify.hpp"

namespace py = pybind11;
using namespace rbd;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

// Accepts int, str ("a/b") or fractions.Fraction.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational::parse(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Rational::parse(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                           py::str(h.attr("denominator")).cast<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected int, str or Fraction");
}

std::vector<std::int64_t> lens_pair(const LensSpace& l) { return {l.m(), l.q()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for cyclic quotient singularities, plumbings and rational blow-downs";

  static py::handle error_type =
      py::exception<Error>(m, "RbdError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SourceError& e) {
      py::object inst = error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    } catch (const Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def("hj_expand", [](std::int64_t mm, std::int64_t q) { return hj_expand(mm, q).terms(); }, py::arg("m"),
        py::arg("q"));
  m.def("hj_value", [](std::vector<std::int64_t> s) { return fraction(hj_value(HJString(std::move(s)))); },
        py::arg("string"));
  m.def("cpq_string", [](std::int64_t p, std::int64_t q) { return cpq_string(p, q).terms(); }, py::arg("p"),
        py::arg("q"));
  m.def("dual_string", [](std::int64_t mm, std::int64_t q) { return dual_string(mm, q).terms(); }, py::arg("m"),
        py::arg("q"));
  m.def("lens_of_chain", [](std::vector<std::int64_t> s) { return lens_pair(lens_of_chain(HJString(std::move(s)))); },
        py::arg("string"));
  m.def(
      "lens_equivalent",
      [](std::vector<std::int64_t> a, std::vector<std::int64_t> b, bool allow_reversal) {
        if (a.size() != 2 || b.size() != 2) throw Error(ErrorCode::InvalidArgument, "lens spaces are (m, q) pairs");
        return lens_equivalent(LensSpace(a[0], a[1]), LensSpace(b[0], b[1]), allow_reversal);
      },
      py::arg("a"), py::arg("b"), py::arg("allow_reversal") = true);

  m.def("hj_expand_report", [](std::int64_t mm, std::int64_t q) { return to_python(hj_expand_report(mm, q)); });
  m.def("hj_cpq_report", [](std::int64_t p, std::int64_t q) { return to_python(hj_cpq_report(p, q)); });
  m.def(
      "classify", [](std::int64_t r, std::int64_t a, std::int64_t b) { return to_python(sing_classify_report(r, a, b)); },
      py::arg("r"), py::arg("a"), py::arg("b"));
  m.def(
      "resolve", [](std::int64_t r, std::int64_t q) { return to_python(sing_resolve_report(r, q)); }, py::arg("r"),
      py::arg("q"));

  m.def(
      "plumbing_report", [](const std::string& text) { return to_python(plumbing_report(parse_plumbing(text))); },
      py::arg("text"));
  m.def(
      "normalize_plumbing", [](const std::string& text) { return print_plumbing(parse_plumbing(text)); },
      py::arg("text"));

  m.def(
      "double_cover", [](std::int64_t e, std::int64_t a, std::int64_t b) { return to_python(double_cover_report(e, a, b)); },
      py::arg("e"), py::arg("a"), py::arg("b"));
  m.def(
      "recognize_en",
      [](std::int64_t chi, std::int64_t sigma, std::int64_t b1) {
        return recognize_en(FourManifoldInvariants(chi, sigma, b1));
      },
      py::arg("chi"), py::arg("sigma"), py::arg("b1") = 0);
  m.def(
      "blowdown",
      [](std::int64_t chi, std::int64_t sigma, const std::vector<std::pair<std::int64_t, std::int64_t>>& plan,
         std::int64_t b1) {
        return to_python(blowdown_report(FourManifoldInvariants(chi, sigma, b1), BlowdownPlan(plan)));
      },
      py::arg("chi"), py::arg("sigma"), py::arg("plan"), py::arg("b1") = 0);
  m.def(
      "w4n", [](std::int64_t n) { return to_python(w4n_report(n)); }, py::arg("n"));

  m.def("paper_z4", [] { return to_python(to_json(paper_z4_pipeline())); });
  m.def(
      "ck_cl", [](int k, int l) { return to_python(to_json(ck_cl_pipeline(k, l))); }, py::arg("k"), py::arg("l"));

  m.def(
      "smoothing",
      [](std::int64_t d, std::int64_t n, std::int64_t a, const py::sequence& t) {
        std::vector<Rational> params;
        for (const auto& h : t) params.push_back(to_rational(h));
        return to_python(smoothing_json(TFamilySpec(d, n, a, std::move(params))));
      },
      py::arg("d"), py::arg("n"), py::arg("a"), py::arg("t"));

  m.def(
      "verify_paper",
      [](const std::string& fault, bool parallel) {
        const auto f = parse_fault(fault);
        if (!f) throw Error(ErrorCode::InvalidArgument, "unknown fault '" + fault + "'");
        std::vector<ScenarioResult> results;
        {
          py::gil_scoped_release release;
          results = run_scenarios(*f, parallel);
        }
        return to_python(verify_report(results, *f));
      },
      py::arg("fault") = "none", py::arg("parallel") = true);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "rbd");
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
