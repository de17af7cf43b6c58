#include "diskcert/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace diskcert {

namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const FloatMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void require_square_pair(const FloatMatrix& a, const FloatMatrix& m) {
  if (a.size() != m.size() || a.size() == 0) {
    throw EigenError("pencil matrices must be square, non-empty and of equal size");
  }
}

EigenPair normalized(double value, std::vector<double> v) {
  const double scale = std::accumulate(v.begin(), v.end(), 0.0,
                                       [](double acc, double x) { return std::max(acc, std::abs(x)); });
  if (!(scale > 0.0) || std::abs(v[0]) <= 1e-13 * scale) {
    throw EigenError("eigenvector has a numerically zero first entry (|v0| = " +
                     std::to_string(std::abs(v[0])) + ", max |v| = " + std::to_string(scale) +
                     "); cannot normalize");
  }
  const double v0 = v[0];
  for (double& x : v) x /= v0;
  v[0] = 1.0;
  return EigenPair{value, std::move(v)};
}

}  // namespace

FloatMatrix FloatMatrix::identity(std::size_t n) {
  FloatMatrix id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

double FloatMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

std::vector<double> FloatMatrix::apply(const std::vector<double>& x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

FloatMatrix to_float(const RationalMatrix& m) {
  FloatMatrix f(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) f(i, j) = m(i, j).to_double();
  return f;
}

SymmetricEigen jacobi_eigen(const FloatMatrix& input) {
  const std::size_t n = input.size();
  FloatMatrix a = input;
  FloatMatrix v = FloatMatrix::identity(n);
  const double scale = a.frobenius_norm();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalTolerance * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p, q).
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > kOffDiagonalTolerance * scale) {
    throw EigenError("Jacobi iteration did not converge in " + std::to_string(kMaxSweeps) +
                     " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), FloatMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

EigenPair smallest_eigpair(const FloatMatrix& a, const FloatMatrix& m) {
  require_square_pair(a, m);
  const std::size_t n = m.size();

  FloatMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      throw EigenError("Cholesky factorization failed at pivot " + std::to_string(j) +
                       ": mass matrix is not numerically positive definite");
    }
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }

  // W = L^{-1} A, then C = W L^{-T} = L^{-1} (L^{-1} A)^T.
  auto forward = [&](const FloatMatrix& x) {
    FloatMatrix out(n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t i = 0; i < n; ++i) {
        double s = x(i, col);
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * out(k, col);
        out(i, col) = s / l(i, i);
      }
    }
    return out;
  };
  const FloatMatrix w = forward(a);
  FloatMatrix wt(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) wt(i, j) = w(j, i);
  FloatMatrix c = forward(wt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c(i, j) = c(j, i) = 0.5 * (c(i, j) + c(j, i));

  const SymmetricEigen eig = jacobi_eigen(c);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = eig.vectors(i, 0);
  // v = L^{-T} y
  std::vector<double> v(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * v[k];
    v[ii] = s / l(ii, ii);
  }
  return normalized(eig.values[0], std::move(v));
}

ExactMassReduction::ExactMassReduction(const RationalMatrix& mass)
    : lower_(mass.size()), diag_(mass.size()), inv_sqrt_diag_(mass.size()) {
  const std::size_t n = mass.size();
  if (n == 0) throw EigenError("empty mass matrix");
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = mass(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= lower_(j, k) * lower_(j, k) * diag_[k];
    if (d.sign() <= 0) {
      throw EigenError("mass matrix is not positive definite (pivot " + std::to_string(j) + ")");
    }
    diag_[j] = d;
    lower_(j, j) = Rational(1);
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = mass(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower_(i, k) * lower_(j, k) * diag_[k];
      lower_(i, j) = s / d;
    }
    inv_sqrt_diag_[j] = 1.0 / std::sqrt(d.to_double());
  }
}

FloatMatrix ExactMassReduction::reduce(const RationalMatrix& x) const {
  const std::size_t n = size();
  if (x.size() != n) throw EigenError("matrix size does not match the reduction");
  // Y = L^{-1} X L^{-T}, column by column via unit forward substitution.
  auto forward = [&](const RationalMatrix& in) {
    RationalMatrix out(n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t i = 0; i < n; ++i) {
        Rational s = in(i, col);
        for (std::size_t k = 0; k < i; ++k) s -= lower_(i, k) * out(k, col);
        out(i, col) = s;
      }
    }
    return out;
  };
  const RationalMatrix y = forward(forward(x).transpose());
  FloatMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = y(i, j).to_double() * inv_sqrt_diag_[i] * inv_sqrt_diag_[j];
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

std::vector<double> ExactMassReduction::lift(const std::vector<double>& y) const {
  const std::size_t n = size();
  if (y.size() != n) throw EigenError("vector size does not match the reduction");
  RationalVector v(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = Rational::from_double(y[ii] * inv_sqrt_diag_[ii]);
    for (std::size_t k = ii + 1; k < n; ++k) s -= lower_(k, ii) * v[k];
    v[ii] = s;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i].to_double();
  return out;
}

EigenPair smallest_eigpair_reduced(const ExactMassReduction& reduction,
                                   const FloatMatrix& reduced_a) {
  const SymmetricEigen eig = jacobi_eigen(reduced_a);
  std::vector<double> y(reduced_a.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = eig.vectors(i, 0);
  return normalized(eig.values[0], reduction.lift(y));
}

}  // namespace diskcert
