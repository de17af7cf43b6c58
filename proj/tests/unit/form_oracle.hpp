// Exact quadratic form of u(r) = r^m sum_j c_j (1 - r^2)^j computed without
// beta functions: in t = r^2 the integrand is t^k times a polynomial, and
//   h[u] = 1/2 int_0^1 (2m^2 t^{m-1} p^2 + 4m t^m p p' + 4 t^{m+1} p'^2
//                       - m b t^m p^2 + b^2/4 t^{m+1} p^2) dt,
//   ||u||^2 = 1/2 int_0^1 t^m p^2 dt,   p(t) = sum_j c_j (1 - t)^j.
#pragma once

#include <vector>

#include "diskcert/rational.hpp"

namespace oracle {

using diskcert::Rational;
using Poly = std::vector<Rational>;  // coefficients of t^0, t^1, ...

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Poly derivative(const Poly& a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<long long>(i)));
  return out;
}

// int_0^1 t^shift a(t) dt, shift >= 0.
inline Rational moment(const Poly& a, int shift) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] / Rational(static_cast<long long>(i) + shift + 1);
  }
  return s;
}

inline Poly trial_poly(const std::vector<Rational>& c) {
  Poly p{Rational(0)}, power{Rational(1)};
  const Poly one_minus_t{Rational(1), Rational(-1)};
  for (const auto& cj : c) {
    if (p.size() < power.size()) p.resize(power.size(), Rational(0));
    for (std::size_t i = 0; i < power.size(); ++i) p[i] += cj * power[i];
    power = mul(power, one_minus_t);
  }
  return p;
}

inline Rational norm(const std::vector<Rational>& c, int m) {
  const Poly p = trial_poly(c);
  return moment(mul(p, p), m) / Rational(2);
}

// h[u] - theta b ||u||^2.
inline Rational form(const std::vector<Rational>& c, int m, const Rational& b, const Rational& theta) {
  const Poly p = trial_poly(c);
  const Poly dp = derivative(p);
  const Poly pp = mul(p, p), pdp = mul(p, dp), dpdp = mul(dp, dp);
  const Rational mr(m);
  Rational h = mr * mr * Rational(2) * (m >= 1 ? moment(pp, m - 1) : Rational(0));
  h += Rational(4) * mr * moment(pdp, m);
  h += Rational(4) * moment(dpdp, m + 1);
  h -= mr * b * moment(pp, m);
  h += b * b / Rational(4) * moment(pp, m + 1);
  return h / Rational(2) - theta * b * norm(c, m);
}

}  // namespace oracle
