#ifndef DISKCERT_GALERKIN_HPP
#define DISKCERT_GALERKIN_HPP

#include <memory>

#include "diskcert/rational.hpp"

namespace diskcert {

/// Trial space spanned by psi_j(r) = r^m (1 - r^2)^j, j = 0..terms.
struct BasisSpec {
  int m = 1;
  int terms = 8;

  std::size_t dimension() const { return static_cast<std::size_t>(terms) + 1; }
};

/// Mass, kinetic (with centrifugal term) and b^2-potential matrices of one
/// trial space. The Rayleigh form is <c,Kc> - m b <c,Mc> + b^2 <c,Pc>.
struct FormTriple {
  RationalMatrix mass;
  RationalMatrix kinetic;
  RationalMatrix potential;
};

/// B(z, w) = (z-1)! (w-1)! / (z+w-1)! for positive integers.
Rational beta_int(int z, int w);

/// M_{jk} = B(m+1, j+k+1) / 2.
RationalMatrix mass_matrix(const BasisSpec& spec);

/// K_{jk} = [2m^2 B(m, j+k+1) - 2m(j+k) B(m+1, j+k) + 4jk B(m+2, j+k-1)] / 2,
/// beta terms with non-positive second argument read as zero. Requires m >= 1.
RationalMatrix kinetic_matrix(const BasisSpec& spec);

/// Kinetic matrix that also admits m = 0: terms whose integer prefactor is
/// zero are dropped before any beta evaluation, so only the 4jk term remains.
RationalMatrix kinetic_matrix_allow_zero(const BasisSpec& spec);

/// P_{jk} = B(m+2, j+k+1) / 8.
RationalMatrix potential_matrix(const BasisSpec& spec);

/// All three matrices; the kinetic part follows kinetic_matrix_allow_zero.
FormTriple assemble_forms(const BasisSpec& spec);

/// Shared, read-only forms for (m, terms); assembled once per process.
std::shared_ptr<const FormTriple> cached_forms(const BasisSpec& spec);

/// <c,Kc> - (m + theta) b <c,Mc> + b^2 <c,Pc>.
///
/// With theta > 0 this is h[u] - theta b ||u||^2; with theta = 0, h[u].
Rational form_value(const RationalVector& c, const BasisSpec& spec, const Rational& b,
                    const Rational& theta);
Rational form_value(const RationalVector& c, const BasisSpec& spec, const FormTriple& forms,
                    const Rational& b, const Rational& theta);

/// ||u||^2 = <c,Mc>.
Rational norm_value(const RationalVector& c, const BasisSpec& spec);

}  // namespace diskcert

#endif  // DISKCERT_GALERKIN_HPP
