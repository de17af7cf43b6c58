#include "diskcert/rational.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <ostream>
#include <regex>

namespace diskcert {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : q_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);  // exact for every finite binary64
  return Rational(std::move(q));
}

double Rational::to_double() const {
  // Values at or beyond DBL_MAX + ulp(DBL_MAX)/2 round to infinity.
  static const mpq_class overflow_edge = mpq_class(DBL_MAX) + mpq_class(std::ldexp(1.0, 970));
  if (::abs(q_) >= overflow_edge) throw std::overflow_error("rational exceeds binary64 range");
  if (::abs(q_) > mpq_class(DBL_MAX)) return sign() > 0 ? DBL_MAX : -DBL_MAX;

  const double truncated = mpq_get_d(q_.get_mpq_t());  // rounds toward zero
  if (mpq_class(truncated) == q_) return truncated;
  const double away = std::nextafter(truncated, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
  const mpq_class below_gap = ::abs(q_ - mpq_class(truncated));
  const mpq_class above_gap = ::abs(mpq_class(away) - q_);
  if (below_gap < above_gap) return truncated;
  if (above_gap < below_gap) return away;
  return (std::bit_cast<std::uint64_t>(truncated) & 1U) == 0 ? truncated : away;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << rat_format(r); }

Rational rat_parse(std::string_view text) {
  static const std::regex grammar("-?[0-9]+(/[1-9][0-9]*)?");
  const std::string s(text);
  if (!std::regex_match(s, grammar)) {
    throw ParseError("malformed rational literal: \"" + s + "\"");
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(mpz_class(s, 10));
  return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
}

std::string rat_format(const Rational& r) {
  std::string out = r.numerator().get_str(10);
  if (!r.is_integer()) out += "/" + r.denominator().get_str(10);
  return out;
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi.
Rational simplest_nonnegative(const Rational& lo, const Rational& hi) {
  const mpz_class fl = lo.floor();
  if (Rational(fl) == lo) return lo;
  const Rational next(mpz_class(fl + 1));
  if (next <= hi) return next;
  // lo, hi both lie strictly inside (fl, fl + 1).
  const Rational base(fl);
  const Rational inner =
      simplest_nonnegative((hi - base).reciprocal(), (lo - base).reciprocal());
  return base + inner.reciprocal();
}

}  // namespace

Rational best_rational_approx(double x, const Rational& eps) {
  if (!std::isfinite(x)) throw std::domain_error("best_rational_approx: non-finite input");
  if (eps.sign() <= 0) throw std::domain_error("best_rational_approx: eps must be positive");
  const Rational exact = Rational::from_double(x);
  const Rational lo = exact - eps;
  const Rational hi = exact + eps;
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (lo.sign() > 0) return simplest_nonnegative(lo, hi);
  return -simplest_nonnegative(-hi, -lo);
}

Rational rat_sqrt_upper(const Rational& r, const Rational& slack) {
  if (r.sign() < 0) throw std::domain_error("rat_sqrt_upper: negative argument");
  if (slack.sign() <= 0) throw std::domain_error("rat_sqrt_upper: slack must be positive");
  if (r.is_zero()) return Rational(0);

  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    return Rational(sqrt(num), sqrt(den));
  }

  const Rational tolerance = slack * std::max(Rational(1), r);
  // s = ceil(sqrt(ceil(r * D^2))) / D for D = 2^k; each candidate is an upper
  // bound, and the excess shrinks like 2 sqrt(r) / D.
  for (unsigned k = 0;; ++k) {
    const mpz_class scale = mpz_class(1) << k;
    const mpz_class target = (r * Rational(mpz_class(scale * scale))).ceil();
    mpz_class root = sqrt(target);
    if (root * root < target) root += 1;
    const Rational s(root, scale);
    if (s * s - r <= tolerance) return s;
  }
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::bilinear(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw std::invalid_argument("vector length does not match matrix dimension");
  }
  mpq_class total = 0;
  mpq_class row;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += (*this)(i, j).raw() * y[j].raw();
    total += x[i].raw() * row;
  }
  return Rational(std::move(total));
}

std::vector<Rational> RationalMatrix::leading_principal_minors() const {
  std::vector<Rational> minors;
  minors.reserve(n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = (*this)(i, j);
    Rational det(1);
    for (std::size_t col = 0; col < k && !det.is_zero(); ++col) {
      std::size_t pivot = col;
      while (pivot < k && a[pivot][col].is_zero()) ++pivot;
      if (pivot == k) {
        det = Rational(0);
        break;
      }
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (std::size_t row = col + 1; row < k; ++row) {
        if (a[row][col].is_zero()) continue;
        const Rational factor = a[row][col] / a[col][col];
        for (std::size_t j = col; j < k; ++j) a[row][j] -= factor * a[col][j];
      }
    }
    minors.push_back(det);
  }
  return minors;
}

}  // namespace diskcert
