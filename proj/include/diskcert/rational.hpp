#ifndef DISKCERT_RATIONAL_HPP
#define DISKCERT_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace diskcert {

/// Thrown when a rational literal does not match `-?[0-9]+(/[1-9][0-9]*)?`.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact fraction in lowest terms with positive denominator.
///
/// Every public constructor and operator leaves the value canonical, so two
/// Rationals compare equal iff their numerators and denominators do.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : q_(mpz_class(static_cast<long>(value))) {}  // NOLINT
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Exact value of a finite binary64 number.
  static Rational from_double(double x);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Nearest binary64, ties to even. Throws std::overflow_error when the
  /// magnitude exceeds DBL_MAX.
  double to_double() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned exponent) const;

  /// Largest integer <= value.
  mpz_class floor() const;
  /// Smallest integer >= value.
  mpz_class ceil() const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses `p` or `p/q` with an optional leading minus; canonicalizes.
Rational rat_parse(std::string_view text);

/// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string rat_format(const Rational& r);

/// Rational with the smallest denominator within `eps` of `x`; among those,
/// the one of smallest magnitude. Found by the Stern-Brocot descent on the
/// closed interval [x - eps, x + eps], with x taken exactly.
Rational best_rational_approx(double x, const Rational& eps);

/// Rational upper bound s on sqrt(r) with s*s >= r and
/// s*s - r <= slack * max(1, r). Exact roots are returned when r is the
/// square of a rational.
Rational rat_sqrt_upper(const Rational& r, const Rational& slack);

using RationalVector = std::vector<Rational>;

/// Dense square matrix of Rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const;
  RationalMatrix transpose() const;

  /// <x, A y>.
  Rational bilinear(const RationalVector& x, const RationalVector& y) const;
  Rational quadratic(const RationalVector& x) const { return bilinear(x, x); }

  /// Determinants of the leading principal submatrices, by exact rational
  /// Gaussian elimination.
  std::vector<Rational> leading_principal_minors() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace diskcert

#endif  // DISKCERT_RATIONAL_HPP
