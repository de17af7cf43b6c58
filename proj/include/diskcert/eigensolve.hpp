#ifndef DISKCERT_EIGENSOLVE_HPP
#define DISKCERT_EIGENSOLVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "diskcert/rational.hpp"

namespace diskcert {

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense square binary64 matrix, row-major.
class FloatMatrix {
 public:
  FloatMatrix() = default;
  explicit FloatMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static FloatMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  double frobenius_norm() const;
  std::vector<double> apply(const std::vector<double>& x) const;

  friend bool operator==(const FloatMatrix&, const FloatMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Generalized eigenpair; vector is scaled so that vector[0] == 1.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

/// Entrywise nearest binary64.
FloatMatrix to_float(const RationalMatrix& m);

/// All eigenvalues (ascending) and orthonormal eigenvectors (columns of the
/// returned matrix) of a symmetric matrix, by cyclic Jacobi rotations.
struct SymmetricEigen {
  std::vector<double> values;
  FloatMatrix vectors;
};
SymmetricEigen jacobi_eigen(const FloatMatrix& a);

/// Smallest eigenpair of A v = lambda M v. M is Cholesky-factored in
/// binary64, the reduced standard problem is diagonalized by Jacobi, and the
/// eigenvector is mapped back and rescaled to a unit first entry.
EigenPair smallest_eigpair(const FloatMatrix& a, const FloatMatrix& m);

/// Exact congruence M = L D L^T of a rational positive definite matrix.
///
/// The pencil (A, M) becomes the standard symmetric problem for
/// D^{-1/2} L^{-1} A L^{-T} D^{-1/2}; the ill-conditioning of M is absorbed in
/// exact arithmetic before anything is rounded.
class ExactMassReduction {
 public:
  explicit ExactMassReduction(const RationalMatrix& mass);

  std::size_t size() const { return diag_.size(); }

  /// D^{-1/2} L^{-1} X L^{-T} D^{-1/2}; the congruence by L is exact, only the
  /// diagonal scaling runs in binary64.
  FloatMatrix reduce(const RationalMatrix& x) const;

  /// v = L^{-T} D^{-1/2} y; the triangular solve runs in exact arithmetic on
  /// the rational value of D^{-1/2} y.
  std::vector<double> lift(const std::vector<double>& y) const;

 private:
  RationalMatrix lower_;  // unit lower triangular L
  RationalVector diag_;
  std::vector<double> inv_sqrt_diag_;
};

/// Smallest eigenpair with the mass matrix handled by ExactMassReduction:
/// the standard problem for reduce(a) is solved by Jacobi, lifted, and
/// rescaled to a unit first entry.
EigenPair smallest_eigpair_reduced(const ExactMassReduction& reduction, const FloatMatrix& reduced_a);

}  // namespace diskcert

#endif  // DISKCERT_EIGENSOLVE_HPP
