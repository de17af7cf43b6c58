#ifndef DISKCERT_DEGENNES_HPP
#define DISKCERT_DEGENNES_HPP

#include <array>
#include <vector>

// Finite-difference model of the de Gennes operator -d^2/dt^2 + (t - xi)^2 on
// the half-line with a Neumann condition at 0. Validation only: nothing here
// feeds the certified bounds.

namespace diskcert {

/// Uniform grid t_i = i T / n, i = 0..n-1, on [0, T] with a Dirichlet node at T.
struct HalfLineGrid {
  double cutoff = 12.0;
  int points = 20000;

  double step() const { return cutoff / points; }
};

struct DeGennesResult {
  double theta0 = 0.0;
  double xi0 = 0.0;
  double phi0 = 0.0;
  double c1 = 0.0;
  std::array<double, 4> moments{};  // T_1..T_4
};

/// Lowest eigenvalue of the second-order discretization (ghost-point Neumann
/// at 0), by inverse iteration with zero shift. Throws EigenError when the
/// iteration stalls and std::invalid_argument for grids that violate
/// T >= xi + 8 or n >= 1000.
double mu_of_xi(double xi, const HalfLineGrid& grid);

/// Golden-section minimization of mu over xi in [0.5, 1.1] to width 1e-8.
/// Fills theta0 and xi0.
DeGennesResult find_theta0(const HalfLineGrid& grid);

/// Positive ground state at xi0 with unit trapezoid L^2 norm; fills phi0,
/// c1 = phi0^2 / 3 and the trapezoid moments T_k = sum w_i t_i^k phi_i^2.
DeGennesResult ground_state_and_moments(double xi0, const HalfLineGrid& grid);

/// find_theta0 followed by ground_state_and_moments at the minimizer.
DeGennesResult solve_degennes(const HalfLineGrid& grid);

/// Discrete ground state values on the grid (trapezoid-normalized, positive).
std::vector<double> ground_state(double xi, const HalfLineGrid& grid);

}  // namespace diskcert

#endif  // DISKCERT_DEGENNES_HPP
