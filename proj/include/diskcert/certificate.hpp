#ifndef DISKCERT_CERTIFICATE_HPP
#define DISKCERT_CERTIFICATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskcert/rational.hpp"

namespace diskcert {

/// 5901/10000, the rational stand-in for the de Gennes constant used by every
/// small-field inequality.
Rational default_theta_star();

inline constexpr int kDefaultTerms = 8;
inline constexpr int kDefaultCoverageTarget = 131;
inline constexpr int kDefaultLargeBThreshold = 130;

/// One angular momentum m, an integer field range [b_left, b_right] and the
/// rational trial vector that makes h[u] - theta* b ||u||^2 negative at both
/// ends. The endpoint values are optional in files; the checker recomputes them.
struct CertifiedInterval {
  int m = 1;
  long long b_left = 0;
  long long b_right = 0;
  RationalVector coeffs;
  std::optional<Rational> left_value;
  std::optional<Rational> right_value;
};

/// Thrown for certificates that are structurally invalid (as opposed to
/// well-formed certificates whose inequalities fail).
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Certificate {
  Rational theta_star = default_theta_star();
  int basis_dim = kDefaultTerms;
  int coverage_target = kDefaultCoverageTarget;
  int large_b_threshold = kDefaultLargeBThreshold;
  bool complete = false;
  std::vector<CertifiedInterval> entries;

  /// Structural checks: m strictly increasing and >= 1, coefficient lengths,
  /// basis_dim >= 0, theta_star > 0, coverage_target >= large_b_threshold.
  /// Throws CertificateError.
  void validate_structure() const;
};

/// Certificate JSON (rationals as "p/q" strings).
std::string certificate_to_json(const Certificate& cert, int indent = 2);
/// Throws CertificateError on malformed JSON, missing fields or bad rationals.
Certificate certificate_from_json(const std::string& text);

Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const Certificate& cert, const std::string& path);

}  // namespace diskcert

#endif  // DISKCERT_CERTIFICATE_HPP
