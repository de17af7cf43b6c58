#include "diskcert/certifier.hpp"

#include <cmath>
#include <optional>

#include "diskcert/checker.hpp"
#include "diskcert/eigensolve.hpp"
#include "diskcert/parallel.hpp"

namespace diskcert {

namespace {

// Relative shrink of the float window before ceil/floor.
constexpr double kWindowGuard = 1e-9;

double quadratic_form(const FloatMatrix& a, const std::vector<double>& c) {
  const std::vector<double> ac = a.apply(c);
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * ac[i];
  return s;
}

CertifiedInterval certify_at(int m, int terms, const Rational& theta_star, double b_ini) {
  const BasisSpec spec{m, terms};
  const auto forms = cached_forms(spec);
  const FloatMatrix k = to_float(forms->kinetic);
  const FloatMatrix mass = to_float(forms->mass);
  const FloatMatrix p = to_float(forms->potential);

  FloatMatrix pencil(spec.dimension());
  for (std::size_t i = 0; i < pencil.size(); ++i)
    for (std::size_t j = 0; j < pencil.size(); ++j)
      pencil(i, j) = k(i, j) - m * b_ini * mass(i, j) + b_ini * b_ini * p(i, j);

  EigenPair pair;
  try {
    pair = smallest_eigpair(pencil, mass);
  } catch (const EigenError& e) {
    throw CertificationError(CertifyFailure::kEigensolve, e.what());
  }

  const FieldWindow window = negativity_window(pair.vector, spec, theta_star);
  const IntegerEndpoints ends = integer_endpoints(window.b_min * (1.0 + kWindowGuard),
                                                  window.b_max * (1.0 - kWindowGuard));

  CertifiedInterval iv;
  iv.m = m;
  iv.b_left = ends.b_left;
  iv.b_right = ends.b_right;
  iv.coeffs = rationalize_coefficients(pair.vector);
  iv.left_value = form_value(iv.coeffs, spec, *forms, Rational(iv.b_left), theta_star);
  iv.right_value = form_value(iv.coeffs, spec, *forms, Rational(iv.b_right), theta_star);

  if (!(iv.b_left < iv.b_right)) {
    throw CertificationError(CertifyFailure::kWindowTooNarrow,
                             "window too narrow: single integer field " + std::to_string(iv.b_left));
  }
  if (iv.left_value->sign() >= 0 || iv.right_value->sign() >= 0) {
    throw CertificationError(CertifyFailure::kRejected,
                             "certificate rejected: exact values at [" + std::to_string(iv.b_left) +
                                 ", " + std::to_string(iv.b_right) + "] are " +
                                 rat_format(*iv.left_value) + " and " + rat_format(*iv.right_value));
  }
  return iv;
}

}  // namespace

const char* to_string(CertifyFailure kind) {
  switch (kind) {
    case CertifyFailure::kBasisTooSmall: return "basis too small";
    case CertifyFailure::kWindowTooNarrow: return "window too narrow";
    case CertifyFailure::kRejected: return "certificate rejected";
    case CertifyFailure::kEigensolve: return "eigensolve failed";
  }
  return "unknown";
}

double initial_field(int m) { return 2.0 * m + 2.25 * std::sqrt(static_cast<double>(m)); }

FieldWindow quadratic_roots(const QuadraticPoly& p) {
  const double disc = p.a1 * p.a1 - 4.0 * p.a2 * p.a0;
  if (!(p.a2 > 0.0) || !(disc > 0.0)) {
    throw CertificationError(CertifyFailure::kBasisTooSmall,
                             "basis too small: p(b) has no two real zeros (discriminant " +
                                 std::to_string(disc) + ")");
  }
  // Cancellation-free pairing of the two roots.
  const double q = -0.5 * (p.a1 + std::copysign(std::sqrt(disc), p.a1));
  double r1 = q / p.a2;
  double r2 = p.a0 / q;
  if (r1 > r2) std::swap(r1, r2);
  return FieldWindow{r1, r2};
}

QuadraticPoly window_polynomial(const std::vector<double>& c, const BasisSpec& spec,
                                const Rational& theta_star) {
  if (c.size() != spec.dimension()) {
    throw std::invalid_argument("coefficient vector length does not match basis dimension");
  }
  const auto forms = cached_forms(spec);
  QuadraticPoly p;
  p.a2 = quadratic_form(to_float(forms->potential), c);
  p.a1 = -(spec.m + theta_star.to_double()) * quadratic_form(to_float(forms->mass), c);
  p.a0 = quadratic_form(to_float(forms->kinetic), c);
  return p;
}

FieldWindow negativity_window(const std::vector<double>& c, const BasisSpec& spec,
                              const Rational& theta_star) {
  return quadratic_roots(window_polynomial(c, spec, theta_star));
}

IntegerEndpoints integer_endpoints(double b_min, double b_max) {
  if (!std::isfinite(b_min) || !std::isfinite(b_max)) {
    throw CertificationError(CertifyFailure::kWindowTooNarrow, "window too narrow: non-finite bounds");
  }
  const IntegerEndpoints e{static_cast<long long>(std::ceil(b_min)),
                           static_cast<long long>(std::floor(b_max))};
  if (e.b_left > e.b_right) {
    throw CertificationError(CertifyFailure::kWindowTooNarrow,
                             "window too narrow: no integer in [" + std::to_string(b_min) + ", " +
                                 std::to_string(b_max) + "]");
  }
  return e;
}

RationalVector rationalize_coefficients(const std::vector<double>& c) {
  const Rational granularity(mpz_class(1), mpz_class(100));
  RationalVector out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.push_back(i == 0 ? Rational(1) : best_rational_approx(c[i], granularity));
  }
  return out;
}

CertifiedInterval certify_m(int m, int terms, const Rational& theta_star) {
  if (m < 1) throw std::invalid_argument("certify_m needs m >= 1");
  if (terms < 0) throw std::invalid_argument("certify_m needs terms >= 0");
  try {
    return certify_at(m, terms, theta_star, initial_field(m));
  } catch (const CertificationError& first) {
    // One retry from a slightly larger starting field.
    const double retry_field = 2.0 * m + 2.5 * std::sqrt(static_cast<double>(m));
    try {
      return certify_at(m, terms, theta_star, retry_field);
    } catch (const CertificationError&) {
      throw first;
    }
  }
}

CertificationRun certify_range(int m_lo, int m_hi, int terms, const Rational& theta_star,
                               int coverage_target, int large_b_threshold) {
  if (m_lo < 1 || m_hi < m_lo) {
    throw std::invalid_argument("certify_range needs 1 <= m_lo <= m_hi (got " +
                                std::to_string(m_lo) + ", " + std::to_string(m_hi) + ")");
  }
  const std::size_t count = static_cast<std::size_t>(m_hi - m_lo) + 1;
  std::vector<std::optional<CertifiedInterval>> results(count);
  std::vector<std::optional<MomentFailure>> failures(count);
  parallel_for_index(count, [&](std::size_t i) {
    const int m = m_lo + static_cast<int>(i);
    try {
      results[i] = certify_m(m, terms, theta_star);
    } catch (const CertificationError& e) {
      failures[i] = MomentFailure{m, e.kind(), e.what()};
    }
  });

  CertificationRun run;
  run.certificate.theta_star = theta_star;
  run.certificate.basis_dim = terms;
  run.certificate.coverage_target = coverage_target;
  run.certificate.large_b_threshold = large_b_threshold;
  for (std::size_t i = 0; i < count; ++i) {
    if (results[i]) run.certificate.entries.push_back(std::move(*results[i]));
    if (failures[i]) run.failures.push_back(std::move(*failures[i]));
  }
  run.certificate.complete = run.failures.empty() && verify_coverage(run.certificate).passed;
  return run;
}

}  // namespace diskcert
