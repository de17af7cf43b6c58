#include "diskcert/branch_curves.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "diskcert/eigensolve.hpp"
#include "diskcert/galerkin.hpp"
#include "diskcert/parallel.hpp"

namespace diskcert {

namespace {

// K and P after the exact congruence that maps M to the identity.
struct ReducedForms {
  FloatMatrix kinetic;
  FloatMatrix potential;
};

std::shared_ptr<const ReducedForms> reduced_forms(int m, int terms) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ReducedForms>> cache;
  const auto key = std::make_pair(m, terms);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const BasisSpec spec{m, terms};
  const FormTriple forms = assemble_forms(spec);
  const ExactMassReduction reduction(forms.mass);
  auto reduced = std::make_shared<const ReducedForms>(
      ReducedForms{reduction.reduce(forms.kinetic), reduction.reduce(forms.potential)});
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(reduced)).first->second;
}

}  // namespace

double branch_eigenvalue(double b, int m, int terms) {
  if (m < 0) throw std::invalid_argument("branch_eigenvalue needs m >= 0");
  if (terms < 1) throw std::invalid_argument("branch_eigenvalue needs terms >= 1");
  const auto forms = reduced_forms(m, terms);
  const std::size_t n = forms->kinetic.size();
  FloatMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = forms->kinetic(i, j) + b * b * forms->potential(i, j);
    }
    a(i, i) -= m * b;
  }
  return jacobi_eigen(a).values.front();
}

BranchMinimum lambda1_upper(double b, int m_max, int terms) {
  if (m_max < 0) throw std::invalid_argument("lambda1_upper needs m_max >= 0");
  BranchMinimum best{branch_eigenvalue(b, 0, terms), 0};
  for (int m = 1; m <= m_max; ++m) {
    const double value = branch_eigenvalue(b, m, terms);
    if (value < best.lambda1) best = BranchMinimum{value, m};
  }
  return best;
}

int default_m_max(double b) { return static_cast<int>(std::ceil(b / 2.0)) + 10; }

std::vector<BranchPoint> sweep(const std::vector<double>& b_grid,
                               const std::function<int(double)>& m_max_rule, int terms) {
  for (std::size_t i = 0; i < b_grid.size(); ++i) {
    if (!(b_grid[i] > 0.0) || (i > 0 && !(b_grid[i] > b_grid[i - 1]))) {
      throw std::invalid_argument("sweep grid must be positive and strictly increasing");
    }
  }
  std::vector<BranchPoint> points(b_grid.size());
  parallel_for_index(b_grid.size(), [&](std::size_t i) {
    const double b = b_grid[i];
    const BranchMinimum best = lambda1_upper(b, m_max_rule(b), terms);
    points[i] = BranchPoint{b, best.m_star, best.lambda1, kDeGennesTheta0 * b, b * b / 8.0};
  });
  return points;
}

void write_branch_csv(std::ostream& out, const std::vector<BranchPoint>& points) {
  out << "b,m_star,lambda1,theta0_b,const_bound\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& p : points) {
    out << p.b << ',' << p.m_star << ',' << p.lambda1 << ',' << p.theta_line << ','
        << p.const_bound << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace diskcert
