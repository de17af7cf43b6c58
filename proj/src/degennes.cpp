#include "diskcert/degennes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "diskcert/eigensolve.hpp"

namespace diskcert {

namespace {

constexpr int kMaxInverseIterations = 500;
constexpr double kEigenvalueTolerance = 1e-14;

// Symmetric form of the ghost-point scheme: S phi = mu W phi with trapezoid
// weights W = diag(h/2, h, h, ...).
struct Discretization {
  std::vector<double> diag;
  double off = 0.0;  // every sub/super-diagonal entry
  std::vector<double> weight;
  std::vector<double> t;
};

Discretization discretize(double xi, const HalfLineGrid& grid) {
  if (grid.points < 1000) throw std::invalid_argument("de Gennes grid needs at least 1000 points");
  if (grid.cutoff < xi + 8.0) {
    throw std::invalid_argument("de Gennes cutoff T=" + std::to_string(grid.cutoff) +
                                " is below xi + 8");
  }
  const auto n = static_cast<std::size_t>(grid.points);
  const double h = grid.step();
  Discretization d;
  d.diag.resize(n);
  d.weight.resize(n, h);
  d.t.resize(n);
  d.off = -1.0 / h;
  d.weight[0] = h / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    d.t[i] = static_cast<double>(i) * h;
    const double v = (d.t[i] - xi) * (d.t[i] - xi);
    d.diag[i] = (i == 0 ? 1.0 / h : 2.0 / h) + d.weight[i] * v;
  }
  return d;
}

// Thomas algorithm for the constant off-diagonal SPD tridiagonal system.
std::vector<double> solve_tridiagonal(const Discretization& d, const std::vector<double>& rhs) {
  const std::size_t n = d.diag.size();
  std::vector<double> c(n), x(rhs);
  double denom = d.diag[0];
  c[0] = d.off / denom;
  x[0] /= denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = d.diag[i] - d.off * c[i - 1];
    c[i] = d.off / denom;
    x[i] = (x[i] - d.off * x[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

double weighted_norm2(const Discretization& d, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += d.weight[i] * v[i] * v[i];
  return s;
}

struct GroundState {
  double value = 0.0;
  std::vector<double> phi;
};

GroundState inverse_iteration(const Discretization& d, double xi) {
  const std::size_t n = d.diag.size();
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = std::exp(-0.5 * (d.t[i] - xi) * (d.t[i] - xi));
  double scale = std::sqrt(weighted_norm2(d, phi));
  for (double& v : phi) v /= scale;

  // With S y = W phi, the Rayleigh quotient of y is y^T W phi / y^T W y; both
  // sums have positive terms for the ground state, so no cancellation.
  double mu = 0.0;
  std::vector<double> rhs(n);
  for (int it = 0; it < kMaxInverseIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = d.weight[i] * phi[i];
    std::vector<double> y = solve_tridiagonal(d, rhs);
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) cross += y[i] * rhs[i];
    const double norm2 = weighted_norm2(d, y);
    const double next = cross / norm2;
    scale = std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) phi[i] = y[i] / scale;
    if (std::abs(next - mu) <= kEigenvalueTolerance * std::abs(next)) return GroundState{next, phi};
    mu = next;
  }
  throw EigenError("inverse iteration for mu(xi) did not converge in " +
                   std::to_string(kMaxInverseIterations) + " iterations");
}

}  // namespace

double mu_of_xi(double xi, const HalfLineGrid& grid) {
  return inverse_iteration(discretize(xi, grid), xi).value;
}

std::vector<double> ground_state(double xi, const HalfLineGrid& grid) {
  GroundState gs = inverse_iteration(discretize(xi, grid), xi);
  double total = 0.0;
  double peak = 0.0;
  for (double v : gs.phi) {
    total += v;
    peak = std::max(peak, std::abs(v));
  }
  if (total < 0.0)
    for (double& v : gs.phi) v = -v;
  for (double v : gs.phi) {
    if (v < -1e-10 * peak) throw EigenError("discrete ground state changes sign");
  }
  return gs.phi;
}

DeGennesResult find_theta0(const HalfLineGrid& grid) {
  constexpr double lo_end = 0.5;
  constexpr double hi_end = 1.1;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo_end;
  double b = hi_end;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = mu_of_xi(x1, grid);
  double f2 = mu_of_xi(x2, grid);
  while (b - a > 1e-8) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = mu_of_xi(x1, grid);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = mu_of_xi(x2, grid);
    }
  }
  DeGennesResult r;
  r.xi0 = f1 < f2 ? x1 : x2;
  r.theta0 = std::min(f1, f2);
  if (r.xi0 - lo_end < 1e-6 || hi_end - r.xi0 < 1e-6) {
    throw std::runtime_error("mu(xi) minimizer sits on the search bracket boundary");
  }
  return r;
}

DeGennesResult ground_state_and_moments(double xi0, const HalfLineGrid& grid) {
  const Discretization d = discretize(xi0, grid);
  const std::vector<double> phi = ground_state(xi0, grid);
  DeGennesResult r;
  r.xi0 = xi0;
  r.theta0 = mu_of_xi(xi0, grid);
  r.phi0 = phi[0];
  r.c1 = r.phi0 * r.phi0 / 3.0;
  for (std::size_t k = 0; k < r.moments.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      s += d.weight[i] * std::pow(d.t[i], static_cast<double>(k + 1)) * phi[i] * phi[i];
    }
    r.moments[k] = s;
  }
  return r;
}

DeGennesResult solve_degennes(const HalfLineGrid& grid) {
  const DeGennesResult minimum = find_theta0(grid);
  DeGennesResult r = ground_state_and_moments(minimum.xi0, grid);
  r.theta0 = minimum.theta0;
  return r;
}

}  // namespace diskcert
