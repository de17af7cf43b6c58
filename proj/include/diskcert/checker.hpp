#ifndef DISKCERT_CHECKER_HPP
#define DISKCERT_CHECKER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diskcert/certificate.hpp"

// Exact-only validation: nothing reachable from here touches binary64.

namespace diskcert {

/// 8 theta*: the constant trial state gives lambda_1(b) <= b^2/8 < theta* b on
/// (0, 8 theta*).
Rational constant_state_limit(const Rational& theta_star);

struct IntervalVerdict {
  int m = 0;
  long long b_left = 0;
  long long b_right = 0;
  bool endpoints_ordered = false;  // b_left < b_right
  bool left_negative = false;
  bool right_negative = false;
  bool left_matches = true;   // stored value absent or equal to the recomputation
  bool right_matches = true;
  bool convex = false;        // <c,Pc> > 0
  bool leading_unit = false;  // coeffs[0] == 1
  Rational left_value;
  Rational right_value;

  bool passed() const {
    return endpoints_ordered && left_negative && right_negative && left_matches &&
           right_matches && convex && leading_unit;
  }
  std::string describe() const;
};

struct CoverageVerdict {
  bool passed = false;
  std::string detail;
  /// (previous b_right, next b_left) of the first uncovered stretch.
  std::optional<std::pair<long long, long long>> gap;
};

struct CheckReport {
  bool theta_ok = false;  // theta_star <= 5901/10000
  std::vector<IntervalVerdict> intervals;
  CoverageVerdict coverage;
  bool overall = false;

  std::string format() const;
};

/// Rebuilds M, K, P for (iv.m, terms) and re-evaluates both endpoint values.
IntervalVerdict verify_interval(const CertifiedInterval& iv, const Rational& theta_star, int terms);

/// Passes iff the first b_left lies below 8 theta*, consecutive intervals
/// overlap (next.b_left <= prev.b_right) and the last b_right reaches the
/// coverage target.
CoverageVerdict verify_coverage(const Certificate& cert);

/// Structural validation (throws CertificateError), then the theta gate,
/// every interval and the coverage chain.
CheckReport check_certificate(const Certificate& cert);

}  // namespace diskcert

#endif  // DISKCERT_CHECKER_HPP
