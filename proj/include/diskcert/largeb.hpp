#ifndef DISKCERT_LARGEB_HPP
#define DISKCERT_LARGEB_HPP

#include "diskcert/rational.hpp"

namespace diskcert {

/// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Rational enclosures of the de Gennes constant Theta_0, of xi_0 = sqrt(Theta_0)
/// and of C_1 = phi(0)^2 / 3. These are trusted inputs.
struct SpectralConstants {
  Enclosure theta0;
  Enclosure xi0;
  Enclosure c1;

  /// (5901/10000, 5902/10000), (7681/10000, 7682/10000), (253/1000, 255/1000).
  static SpectralConstants defaults();

  /// Ordered endpoints, theta0 and xi0 positive, c1 non-negative, and xi0^2
  /// consistent with theta0.
  /// Throws std::invalid_argument.
  void validate() const;
};

/// Enclosures of T_k = int t^k phi(t)^2 dt, k = 1..4, from the closed forms
/// T1 = xi0, T2 = 3/2 xi0^2, T3 = C1/2 + 5/2 xi0^3,
/// T4 = 3/8 + 35/8 xi0^4 + 7/8 C1 xi0.
struct MomentSet {
  Enclosure t1, t2, t3, t4;
};

MomentSet moment_enclosures(const SpectralConstants& sc);

/// Bounds for the large-field estimate i[u] <= -A + B b^{-1/2} + C b^{-1} with
/// A = C1, B = 5/4 + 5/3 C1 xi0 + 37/12 xi0^4, C = 5/3 xi0^2 (C1 + 5 xi0^3).
struct BoundCoefficients {
  Rational a_low;
  Rational b_high;
  Rational c_high;
};

BoundCoefficients coefficient_bounds(const SpectralConstants& sc);

/// Upper bound on b0 = (B + sqrt(B^2 + 4AC))^2 / (4A^2); b0 increases in B and
/// C and decreases in A, so the coefficient bounds enter at the matching ends.
Rational b0_upper_bound(const BoundCoefficients& bc);

struct LargeBReport {
  BoundCoefficients coefficients;
  Rational discriminant;  // b_high^2 + 4 a_low c_high
  Rational sqrt_bound;    // rational upper bound of its square root
  Rational b0_bound;
  long long threshold = 0;
  bool passed = false;  // b0_bound < threshold
};

LargeBReport large_b_report(const SpectralConstants& sc, long long threshold);

/// True iff b0 is certified below the threshold.
bool verify_large_b(const SpectralConstants& sc, long long threshold);

/// Decides 1 - x + x^2/2 - x^3/6 < e^{-x} < 1 - x + x^2/2 - x^3/6 + x^4/24 by
/// enclosing e^{-x} between rational Taylor partial sums with the Lagrange tail
/// bound x^{n+1}/(n+1)!. Requires x > 0.
bool exp_taylor_bracket(const Rational& x);

/// m_opt = b/2 - T1 sqrt(b) + T2 - 2/3 T3 / sqrt(b), the minimizer of the
/// large-field bound over the angular momentum.
double m_opt_from_moments(double b, double t1, double t2, double t3);

/// m_opt with the moments taken at the midpoints of their enclosures.
double predicted_m_opt(double b, const SpectralConstants& sc);

}  // namespace diskcert

#endif  // DISKCERT_LARGEB_HPP
