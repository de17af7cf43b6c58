#ifndef DISKCERT_BRANCH_CURVES_HPP
#define DISKCERT_BRANCH_CURVES_HPP

#include <functional>
#include <iosfwd>
#include <vector>

namespace diskcert {

/// Reference value 0.590106125 of the de Gennes constant for the Theta_0 b line.
inline constexpr double kDeGennesTheta0 = 0.590106125;
inline constexpr int kBranchTerms = 12;

struct BranchPoint {
  double b = 0.0;
  int m_star = 0;
  double lambda1 = 0.0;
  double theta_line = 0.0;   // Theta_0 b
  double const_bound = 0.0;  // b^2 / 8
};

/// Rayleigh-Ritz upper bound for the branch eigenvalue lambda(b, m): smallest
/// eigenvalue of (K - m b M + b^2 P, M) on r^m (1 - r^2)^j, j = 0..terms.
/// m = 0 is admitted. The mass matrix is reduced exactly (see
/// ExactMassReduction), so large bases stay well conditioned.
double branch_eigenvalue(double b, int m, int terms = kBranchTerms);

struct BranchMinimum {
  double lambda1 = 0.0;
  int m_star = 0;
};

/// Minimum of branch_eigenvalue over m in [0, m_max].
BranchMinimum lambda1_upper(double b, int m_max, int terms = kBranchTerms);

/// ceil(b/2) + 10.
int default_m_max(double b);

/// One BranchPoint per grid value. The grid must be strictly increasing and
/// positive (std::invalid_argument otherwise).
std::vector<BranchPoint> sweep(const std::vector<double>& b_grid,
                               const std::function<int(double)>& m_max_rule = default_m_max,
                               int terms = kBranchTerms);

/// `b,m_star,lambda1,theta0_b,const_bound` header and one row per point,
/// floats with 17 significant digits.
void write_branch_csv(std::ostream& out, const std::vector<BranchPoint>& points);

}  // namespace diskcert

#endif  // DISKCERT_BRANCH_CURVES_HPP
