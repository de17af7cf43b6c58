#ifndef DISKCERT_CERTIFIER_HPP
#define DISKCERT_CERTIFIER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "diskcert/certificate.hpp"
#include "diskcert/galerkin.hpp"

namespace diskcert {

/// Why a single angular momentum could not be certified.
enum class CertifyFailure {
  kBasisTooSmall,    // p(b) has no two real zeros
  kWindowTooNarrow,  // no integer between the zeros
  kRejected,         // exact endpoint value is not negative
  kEigensolve,       // floating-point stage failed
};

const char* to_string(CertifyFailure kind);

class CertificationError : public std::runtime_error {
 public:
  CertificationError(CertifyFailure kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  CertifyFailure kind() const { return kind_; }

 private:
  CertifyFailure kind_;
};

/// p(b) = a2 b^2 + a1 b + a0.
struct QuadraticPoly {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
};

struct FieldWindow {
  double b_min = 0.0;
  double b_max = 0.0;
};

struct IntegerEndpoints {
  long long b_left = 0;
  long long b_right = 0;
};

/// 2m + 2.25 sqrt(m).
double initial_field(int m);

/// Both real roots in increasing order. Throws CertificationError
/// (kBasisTooSmall) when the discriminant is not positive.
FieldWindow quadratic_roots(const QuadraticPoly& p);

/// p(b) = <c,Kc> - (m + theta) b <c,Mc> + b^2 <c,Pc> in binary64 from the
/// floated matrices.
QuadraticPoly window_polynomial(const std::vector<double>& c, const BasisSpec& spec,
                                const Rational& theta_star);

FieldWindow negativity_window(const std::vector<double>& c, const BasisSpec& spec,
                              const Rational& theta_star);

/// [ceil(b_min), floor(b_max)]; throws kWindowTooNarrow when empty.
IntegerEndpoints integer_endpoints(double b_min, double b_max);

/// Entry 0 pinned to 1, the rest rounded to the simplest rational within 1/100.
RationalVector rationalize_coefficients(const std::vector<double>& c);

/// Full per-m pipeline. The result is returned only after both endpoint values
/// were evaluated exactly and found strictly negative.
CertifiedInterval certify_m(int m, int terms = kDefaultTerms,
                            const Rational& theta_star = default_theta_star());

struct MomentFailure {
  int m = 0;
  CertifyFailure kind = CertifyFailure::kRejected;
  std::string reason;
};

struct CertificationRun {
  Certificate certificate;
  std::vector<MomentFailure> failures;
};

/// certify_m for every m in [m_lo, m_hi], fanned out over worker threads and
/// collected in m order. certificate.complete is set only when every m
/// succeeded and the intervals cover the small-field range.
CertificationRun certify_range(int m_lo, int m_hi, int terms = kDefaultTerms,
                               const Rational& theta_star = default_theta_star(),
                               int coverage_target = kDefaultCoverageTarget,
                               int large_b_threshold = kDefaultLargeBThreshold);

}  // namespace diskcert

#endif  // DISKCERT_CERTIFIER_HPP
