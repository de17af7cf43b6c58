#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskcert/branch_curves.hpp"
#include "diskcert/certificate.hpp"
#include "diskcert/certifier.hpp"
#include "diskcert/checker.hpp"
#include "diskcert/cli.hpp"
#include "diskcert/degennes.hpp"
#include "diskcert/largeb.hpp"

namespace py = pybind11;
using namespace diskcert;

namespace {

Rational parse_or(const std::string& s) { return rat_parse(s); }

py::dict interval_dict(const CertifiedInterval& e) {
  py::dict d;
  d["m"] = e.m;
  d["b_left"] = e.b_left;
  d["b_right"] = e.b_right;
  std::vector<std::string> coeffs;
  for (const auto& c : e.coeffs) coeffs.push_back(rat_format(c));
  d["coeffs"] = coeffs;
  d["left_value"] = e.left_value ? py::object(py::str(rat_format(*e.left_value))) : py::none();
  d["right_value"] = e.right_value ? py::object(py::str(rat_format(*e.right_value))) : py::none();
  return d;
}

py::dict check_json(const std::string& text) {
  const CheckReport r = check_certificate(certificate_from_json(text));
  py::dict d;
  d["theta_ok"] = r.theta_ok;
  d["coverage_ok"] = r.coverage.passed;
  d["coverage_detail"] = r.coverage.detail;
  d["overall"] = r.overall;
  py::list rows;
  for (const auto& v : r.intervals) {
    py::dict row;
    row["m"] = v.m;
    row["passed"] = v.passed();
    row["left_value"] = rat_format(v.left_value);
    row["right_value"] = rat_format(v.right_value);
    rows.append(row);
  }
  d["intervals"] = rows;
  d["report"] = r.format();
  return d;
}

py::dict large_b(long long threshold, const std::vector<std::string>& enclosures) {
  SpectralConstants sc = SpectralConstants::defaults();
  if (!enclosures.empty()) {
    if (enclosures.size() != 6) throw std::invalid_argument("expected six enclosure endpoints");
    sc = SpectralConstants{Enclosure{parse_or(enclosures[0]), parse_or(enclosures[1])},
                           Enclosure{parse_or(enclosures[2]), parse_or(enclosures[3])},
                           Enclosure{parse_or(enclosures[4]), parse_or(enclosures[5])}};
  }
  const LargeBReport r = large_b_report(sc, threshold);
  py::dict d;
  d["a_low"] = rat_format(r.coefficients.a_low);
  d["b_high"] = rat_format(r.coefficients.b_high);
  d["c_high"] = rat_format(r.coefficients.c_high);
  d["discriminant"] = rat_format(r.discriminant);
  d["sqrt_bound"] = rat_format(r.sqrt_bound);
  d["b0_bound"] = rat_format(r.b0_bound);
  d["passed"] = r.passed;
  return d;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_diskcert, m) {
  m.doc() = "Exact certificates for the magnetic Neumann Laplacian on the unit disk";

  py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("best_rational_approx",
        [](double x, const std::string& eps) { return rat_format(best_rational_approx(x, rat_parse(eps))); },
        py::arg("x"), py::arg("eps") = "1/100");
  m.def("form_value",
        [](const std::vector<std::string>& coeffs, int m, const std::string& b, const std::string& theta) {
          RationalVector c;
          for (const auto& s : coeffs) c.push_back(rat_parse(s));
          return rat_format(form_value(c, BasisSpec{m, static_cast<int>(c.size()) - 1}, rat_parse(b),
                                       rat_parse(theta)));
        },
        py::arg("coeffs"), py::arg("m"), py::arg("b"), py::arg("theta") = "5901/10000");
  m.def("certify_m",
        [](int m, int terms, const std::string& theta) {
          return interval_dict(certify_m(m, terms, rat_parse(theta)));
        },
        py::arg("m"), py::arg("terms") = kDefaultTerms, py::arg("theta_star") = "5901/10000");
  m.def("certify_range_json",
        [](int m_lo, int m_hi, int terms, const std::string& theta) {
          const CertificationRun run = certify_range(m_lo, m_hi, terms, rat_parse(theta));
          return certificate_to_json(run.certificate);
        },
        py::arg("m_lo") = 1, py::arg("m_hi") = 56, py::arg("terms") = kDefaultTerms,
        py::arg("theta_star") = "5901/10000");
  m.def("check_json", &check_json, py::arg("text"));
  m.def("large_b", &large_b, py::arg("threshold") = kDefaultLargeBThreshold,
        py::arg("enclosures") = std::vector<std::string>{});
  m.def("solve_degennes",
        [](double cutoff, int points) {
          const DeGennesResult r = solve_degennes(HalfLineGrid{cutoff, points});
          py::dict d;
          d["theta0"] = r.theta0;
          d["xi0"] = r.xi0;
          d["phi0"] = r.phi0;
          d["c1"] = r.c1;
          d["moments"] = std::vector<double>(r.moments.begin(), r.moments.end());
          return d;
        },
        py::arg("cutoff") = 12.0, py::arg("points") = 20000);
  m.def("branch_eigenvalue", &branch_eigenvalue, py::arg("b"), py::arg("m"),
        py::arg("terms") = kBranchTerms);
  m.def("lambda1_upper",
        [](double b, int terms) {
          const BranchMinimum r = lambda1_upper(b, default_m_max(b), terms);
          return py::make_tuple(r.lambda1, r.m_star);
        },
        py::arg("b"), py::arg("terms") = kBranchTerms);
  m.def("run_cli", &cli, py::arg("args"));
}
