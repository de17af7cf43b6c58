#include "diskcert/checker.hpp"

#include <sstream>

#include "diskcert/galerkin.hpp"
#include "diskcert/parallel.hpp"

namespace diskcert {

Rational constant_state_limit(const Rational& theta_star) {
  if (theta_star.sign() <= 0) throw std::domain_error("theta_star must be positive");
  return Rational(8) * theta_star;
}

std::string IntervalVerdict::describe() const {
  std::ostringstream os;
  os << "m=" << m << " [" << b_left << ", " << b_right << "] " << (passed() ? "PASS" : "FAIL");
  if (!endpoints_ordered) os << " (b_left >= b_right)";
  if (!leading_unit) os << " (coeffs[0] != 1)";
  if (!convex) os << " (<c,Pc> not positive)";
  if (!left_negative) os << " (value at b_left not negative: " << left_value << ")";
  if (!right_negative) os << " (value at b_right not negative: " << right_value << ")";
  if (!left_matches) os << " (stored left_value differs from recomputation " << left_value << ")";
  if (!right_matches) os << " (stored right_value differs from recomputation " << right_value << ")";
  return os.str();
}

std::string CheckReport::format() const {
  std::ostringstream os;
  if (!theta_ok) os << "theta_star exceeds the lower enclosure 5901/10000 of the de Gennes constant\n";
  for (const auto& v : intervals) os << v.describe() << "\n";
  os << "coverage: " << (coverage.passed ? "PASS" : "FAIL") << " - " << coverage.detail << "\n";
  os << "overall: " << (overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

IntervalVerdict verify_interval(const CertifiedInterval& iv, const Rational& theta_star, int terms) {
  IntervalVerdict v;
  v.m = iv.m;
  v.b_left = iv.b_left;
  v.b_right = iv.b_right;
  v.endpoints_ordered = iv.b_left < iv.b_right;

  const BasisSpec spec{iv.m, terms};
  if (iv.m < 1 || terms < 0 || iv.coeffs.size() != spec.dimension()) {
    v.left_matches = v.right_matches = false;
    return v;
  }
  const auto forms = cached_forms(spec);
  v.leading_unit = iv.coeffs.front() == Rational(1);
  v.convex = forms->potential.quadratic(iv.coeffs).sign() > 0;
  v.left_value = form_value(iv.coeffs, spec, *forms, Rational(iv.b_left), theta_star);
  v.right_value = form_value(iv.coeffs, spec, *forms, Rational(iv.b_right), theta_star);
  v.left_negative = v.left_value.sign() < 0;
  v.right_negative = v.right_value.sign() < 0;
  if (iv.left_value) v.left_matches = *iv.left_value == v.left_value;
  if (iv.right_value) v.right_matches = *iv.right_value == v.right_value;
  return v;
}

CoverageVerdict verify_coverage(const Certificate& cert) {
  CoverageVerdict out;
  if (cert.entries.empty()) {
    out.detail = "no intervals";
    return out;
  }
  const Rational limit = constant_state_limit(cert.theta_star);
  const auto& first = cert.entries.front();
  if (!(Rational(first.b_left) < limit)) {
    out.detail = "first interval starts at " + std::to_string(first.b_left) +
                 ", not below the constant-state limit " + rat_format(limit);
    out.gap = std::make_pair(0LL, first.b_left);
    return out;
  }
  for (std::size_t i = 1; i < cert.entries.size(); ++i) {
    const auto& prev = cert.entries[i - 1];
    const auto& next = cert.entries[i];
    if (next.b_left > prev.b_right) {
      out.detail = "gap between " + std::to_string(prev.b_right) + " and " +
                   std::to_string(next.b_left) + " (m=" + std::to_string(prev.m) + " to m=" +
                   std::to_string(next.m) + ")";
      out.gap = std::make_pair(prev.b_right, next.b_left);
      return out;
    }
  }
  const auto& last = cert.entries.back();
  if (last.b_right < cert.coverage_target) {
    out.detail = "last interval ends at " + std::to_string(last.b_right) +
                 ", short of the target " + std::to_string(cert.coverage_target);
    out.gap = std::make_pair(last.b_right, static_cast<long long>(cert.coverage_target));
    return out;
  }
  out.passed = true;
  out.detail = "(0, " + rat_format(limit) + ") by the constant state, then " +
               std::to_string(cert.entries.size()) + " overlapping intervals from " +
               std::to_string(first.b_left) + " to " + std::to_string(last.b_right);
  return out;
}

CheckReport check_certificate(const Certificate& cert) {
  cert.validate_structure();
  CheckReport report;
  report.theta_ok = cert.theta_star <= default_theta_star();
  report.intervals.resize(cert.entries.size());
  parallel_for_index(cert.entries.size(), [&](std::size_t i) {
    report.intervals[i] = verify_interval(cert.entries[i], cert.theta_star, cert.basis_dim);
  });
  report.coverage = verify_coverage(cert);
  report.overall = report.theta_ok && report.coverage.passed;
  for (const auto& v : report.intervals) report.overall = report.overall && v.passed();
  return report;
}

}  // namespace diskcert
