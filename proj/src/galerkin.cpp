#include "diskcert/galerkin.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace diskcert {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void require_valid(const BasisSpec& spec, int min_m) {
  if (spec.m < min_m) {
    throw std::invalid_argument("angular momentum m=" + std::to_string(spec.m) +
                                " is below the supported minimum " + std::to_string(min_m));
  }
  if (spec.terms < 0) throw std::invalid_argument("basis needs terms >= 0");
}

// Beta term with the zero convention for a non-positive second argument.
Rational beta_or_zero(int z, int w) { return w <= 0 ? Rational(0) : beta_int(z, w); }

RationalMatrix kinetic_impl(const BasisSpec& spec) {
  const int m = spec.m;
  const std::size_t n = spec.dimension();
  RationalMatrix k(n);
  const Rational half(mpz_class(1), mpz_class(2));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j; l < n; ++l) {
      const int s = static_cast<int>(j + l);
      Rational sum;
      if (m != 0) {
        sum += Rational(2LL * m * m) * beta_or_zero(m, s + 1);
        if (s != 0) sum -= Rational(2LL * m * s) * beta_or_zero(m + 1, s);
      }
      const long long jk4 = 4LL * static_cast<long long>(j * l);
      if (jk4 != 0) sum += Rational(jk4) * beta_or_zero(m + 2, s - 1);
      k(j, l) = half * sum;
      k(l, j) = k(j, l);
    }
  }
  return k;
}

RationalMatrix hankel_beta(const BasisSpec& spec, int z_offset, const Rational& scale) {
  const std::size_t n = spec.dimension();
  RationalMatrix a(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      a(j, l) = scale * beta_int(spec.m + z_offset, static_cast<int>(j + l) + 1);
  return a;
}

}  // namespace

Rational beta_int(int z, int w) {
  if (z < 1 || w < 1) {
    throw std::domain_error("beta_int needs positive integer arguments, got (" +
                            std::to_string(z) + ", " + std::to_string(w) + ")");
  }
  return Rational(factorial(z - 1) * factorial(w - 1), factorial(z + w - 1));
}

RationalMatrix mass_matrix(const BasisSpec& spec) {
  require_valid(spec, 0);
  return hankel_beta(spec, 1, Rational(mpz_class(1), mpz_class(2)));
}

RationalMatrix kinetic_matrix(const BasisSpec& spec) {
  require_valid(spec, 1);
  return kinetic_impl(spec);
}

RationalMatrix kinetic_matrix_allow_zero(const BasisSpec& spec) {
  require_valid(spec, 0);
  return kinetic_impl(spec);
}

RationalMatrix potential_matrix(const BasisSpec& spec) {
  require_valid(spec, 0);
  return hankel_beta(spec, 2, Rational(mpz_class(1), mpz_class(8)));
}

FormTriple assemble_forms(const BasisSpec& spec) {
  return FormTriple{mass_matrix(spec), kinetic_matrix_allow_zero(spec), potential_matrix(spec)};
}

std::shared_ptr<const FormTriple> cached_forms(const BasisSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FormTriple>> cache;
  const auto key = std::make_pair(spec.m, spec.terms);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto forms = std::make_shared<const FormTriple>(assemble_forms(spec));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(forms)).first->second;
}

Rational form_value(const RationalVector& c, const BasisSpec& spec, const FormTriple& forms,
                    const Rational& b, const Rational& theta) {
  if (c.size() != spec.dimension()) {
    throw std::invalid_argument("coefficient vector has length " + std::to_string(c.size()) +
                                ", basis expects " + std::to_string(spec.dimension()));
  }
  const Rational kc = forms.kinetic.quadratic(c);
  const Rational mc = forms.mass.quadratic(c);
  const Rational pc = forms.potential.quadratic(c);
  return kc - (Rational(spec.m) + theta) * b * mc + b * b * pc;
}

Rational form_value(const RationalVector& c, const BasisSpec& spec, const Rational& b,
                    const Rational& theta) {
  return form_value(c, spec, *cached_forms(spec), b, theta);
}

Rational norm_value(const RationalVector& c, const BasisSpec& spec) {
  if (c.size() != spec.dimension()) {
    throw std::invalid_argument("coefficient vector length does not match basis dimension");
  }
  return cached_forms(spec)->mass.quadratic(c);
}

}  // namespace diskcert
