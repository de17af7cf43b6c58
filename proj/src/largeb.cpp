#include "diskcert/largeb.hpp"

#include <cmath>
#include <stdexcept>

namespace diskcert {

namespace {

Rational frac(long long p, long long q) { return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))); }

// Monotone increasing maps on positive arguments act endpoint-wise.
Enclosure map_increasing(const Enclosure& xi, const Enclosure& c1,
                         Rational (*f)(const Rational&, const Rational&)) {
  return Enclosure{f(xi.lo, c1.lo), f(xi.hi, c1.hi)};
}

Rational t2_of(const Rational& xi, const Rational&) { return frac(3, 2) * xi.pow(2); }
Rational t3_of(const Rational& xi, const Rational& c1) { return c1 / Rational(2) + frac(5, 2) * xi.pow(3); }
Rational t4_of(const Rational& xi, const Rational& c1) {
  return frac(3, 8) + frac(35, 8) * xi.pow(4) + frac(7, 8) * c1 * xi;
}
Rational b_of(const Rational& xi, const Rational& c1) {
  return frac(5, 4) + frac(5, 3) * c1 * xi + frac(37, 12) * xi.pow(4);
}
Rational c_of(const Rational& xi, const Rational& c1) {
  return frac(5, 3) * xi.pow(2) * (c1 + Rational(5) * xi.pow(3));
}

const Rational& sqrt_slack() {
  static const Rational slack(mpz_class(1), mpz_class(1000000));
  return slack;
}

}  // namespace

SpectralConstants SpectralConstants::defaults() {
  return SpectralConstants{Enclosure{frac(5901, 10000), frac(5902, 10000)},
                           Enclosure{frac(7681, 10000), frac(7682, 10000)},
                           Enclosure{frac(253, 1000), frac(255, 1000)}};
}

void SpectralConstants::validate() const {
  auto check = [](const Enclosure& e, const char* name, int min_sign) {
    if (e.lo.sign() < min_sign) {
      throw std::invalid_argument(std::string(name) + " enclosure must be " +
                                  (min_sign > 0 ? "positive" : "non-negative"));
    }
    if (e.hi < e.lo) throw std::invalid_argument(std::string(name) + " enclosure has lo > hi");
  };
  check(theta0, "theta0", 1);
  check(xi0, "xi0", 1);
  check(c1, "c1", 0);
  if (xi0.lo.pow(2) > theta0.hi || xi0.hi.pow(2) < theta0.lo) {
    throw std::invalid_argument("xi0 enclosure is inconsistent with xi0^2 = theta0");
  }
}

MomentSet moment_enclosures(const SpectralConstants& sc) {
  sc.validate();
  return MomentSet{sc.xi0, map_increasing(sc.xi0, sc.c1, t2_of),
                   map_increasing(sc.xi0, sc.c1, t3_of), map_increasing(sc.xi0, sc.c1, t4_of)};
}

BoundCoefficients coefficient_bounds(const SpectralConstants& sc) {
  sc.validate();
  return BoundCoefficients{sc.c1.lo, b_of(sc.xi0.hi, sc.c1.hi), c_of(sc.xi0.hi, sc.c1.hi)};
}

Rational b0_upper_bound(const BoundCoefficients& bc) {
  if (bc.a_low.sign() <= 0 || bc.b_high.sign() < 0 || bc.c_high.sign() < 0) {
    throw std::invalid_argument("b0_upper_bound needs A > 0 and B, C >= 0");
  }
  const Rational disc = bc.b_high.pow(2) + Rational(4) * bc.a_low * bc.c_high;
  const Rational s = rat_sqrt_upper(disc, sqrt_slack());
  return (bc.b_high + s).pow(2) / (Rational(4) * bc.a_low.pow(2));
}

LargeBReport large_b_report(const SpectralConstants& sc, long long threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be a positive integer");
  LargeBReport r;
  r.threshold = threshold;
  r.coefficients = coefficient_bounds(sc);
  const auto& bc = r.coefficients;
  r.discriminant = bc.b_high.pow(2) + Rational(4) * bc.a_low * bc.c_high;
  r.sqrt_bound = rat_sqrt_upper(r.discriminant, sqrt_slack());
  r.b0_bound = b0_upper_bound(bc);
  r.passed = r.b0_bound < Rational(threshold);
  return r;
}

bool verify_large_b(const SpectralConstants& sc, long long threshold) {
  return large_b_report(sc, threshold).passed;
}

bool exp_taylor_bracket(const Rational& x) {
  if (x.sign() <= 0) throw std::domain_error("exp_taylor_bracket needs x > 0");
  const Rational lower = Rational(1) - x + x.pow(2) / Rational(2) - x.pow(3) / Rational(6);
  const Rational upper = lower + x.pow(4) / Rational(24);

  Rational term(1);  // (-x)^k / k!
  Rational partial(1);
  for (unsigned k = 1; k <= 1000; ++k) {
    term *= -x / Rational(static_cast<long long>(k));
    partial += term;
    const Rational tail = term.abs() * x / Rational(static_cast<long long>(k) + 1);
    if (k < 4) continue;
    const Rational enclosure_lo = partial - tail;
    const Rational enclosure_hi = partial + tail;
    if (lower < enclosure_lo && enclosure_hi < upper) return true;
    if (enclosure_hi <= lower || enclosure_lo >= upper) return false;
  }
  return false;
}

double m_opt_from_moments(double b, double t1, double t2, double t3) {
  if (!(b > 0.0)) throw std::domain_error("m_opt needs b > 0");
  const double root = std::sqrt(b);
  return b / 2.0 - t1 * root + t2 - (2.0 / 3.0) * t3 / root;
}

double predicted_m_opt(double b, const SpectralConstants& sc) {
  const MomentSet t = moment_enclosures(sc);
  return m_opt_from_moments(b, t.t1.midpoint().to_double(), t.t2.midpoint().to_double(),
                            t.t3.midpoint().to_double());
}

}  // namespace diskcert
