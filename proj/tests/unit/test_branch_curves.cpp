#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "diskcert/branch_curves.hpp"
#include "diskcert/certificate.hpp"
#include "diskcert/largeb.hpp"

using namespace diskcert;

TEST_CASE("branch eigenvalue examples") {
  CHECK(std::abs(branch_eigenvalue(0.0, 0)) <= 1e-12);
  for (double b : {0.1, 0.5, 1.0, 2.0}) CHECK(branch_eigenvalue(b, 0, 8) <= b * b / 8 + 1e-12);
  CHECK(branch_eigenvalue(100.0, 43) < 59.01);
  CHECK_THROWS_AS(branch_eigenvalue(1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(branch_eigenvalue(1.0, 1, 0), std::invalid_argument);
}

TEST_CASE("larger bases never raise the eigenvalue") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> bd(0.5, 120.0);
  std::uniform_int_distribution<int> md(0, 60);
  for (int trial = 0; trial < 40; ++trial) {
    const double b = bd(rng);
    const int m = md(rng);
    for (int n = 1; n < 12; ++n) {
      INFO("b=" << b << " m=" << m << " N=" << n);
      CHECK(branch_eigenvalue(b, m, n + 1) <= branch_eigenvalue(b, m, n) + 1e-9 * std::max(1.0, b));
    }
  }
}

TEST_CASE("lowest branch") {
  const BranchMinimum small = lambda1_upper(0.5, default_m_max(0.5));
  CHECK(small.lambda1 <= 0.03125);
  const BranchMinimum mid = lambda1_upper(10.0, default_m_max(10.0));
  CHECK(mid.m_star >= 1);
  CHECK(mid.lambda1 < branch_eigenvalue(10.0, 0));
  const BranchMinimum big = lambda1_upper(100.0, default_m_max(100.0));
  CHECK(big.lambda1 < 59.01);
  CHECK(std::abs(big.m_star - 43) <= 2);
  CHECK(default_m_max(100.0) == 60);
  CHECK(default_m_max(3.0) == 12);
}

TEST_CASE("sweep rows") {
  CHECK(sweep({}).empty());
  const auto four = sweep({4.0});
  REQUIRE(four.size() == 1);
  CHECK(four[0].lambda1 < 0.59 * 4 * (1 + 1e-12));
  CHECK(four[0].lambda1 <= 2.0);
  CHECK_THROWS_AS(sweep({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep({0.0}), std::invalid_argument);

  std::vector<double> grid;
  for (int b = 1; b <= 140; ++b) grid.push_back(b);
  const auto points = sweep(grid);
  REQUIRE(points.size() == 140);
  const SpectralConstants sc = SpectralConstants::defaults();
  for (const auto& p : points) {
    INFO("b=" << p.b);
    CHECK(p.lambda1 > 0.0);
    CHECK(p.lambda1 < p.theta_line);
    CHECK(p.lambda1 <= std::min(p.const_bound, p.theta_line * 1.05) + 1e-9);
    if (p.b >= 50) CHECK(std::abs(p.m_star - std::lround(predicted_m_opt(p.b, sc))) <= 2);
  }
}

TEST_CASE("float branches agree with the exact certificate") {
  const Certificate cert = read_certificate_file(DISKCERT_DATA_DIR "/reference_certificate.json");
  const double theta = cert.theta_star.to_double();
  for (const auto& e : cert.entries) {
    for (long long b = e.b_left; b <= e.b_right; ++b) {
      INFO("m=" << e.m << " b=" << b);
      CHECK(branch_eigenvalue(static_cast<double>(b), e.m, 8) < theta * b + 1e-9);
    }
  }
}

TEST_CASE("csv layout") {
  std::ostringstream empty;
  write_branch_csv(empty, {});
  CHECK(empty.str() == "b,m_star,lambda1,theta0_b,const_bound\n");

  std::ostringstream os;
  write_branch_csv(os, {BranchPoint{2.0, 0, 0.1, 0.2, 0.5}});
  CHECK(os.str() ==
        "b,m_star,lambda1,theta0_b,const_bound\n2,0,0.10000000000000001,0.20000000000000001,0.5\n");
}
