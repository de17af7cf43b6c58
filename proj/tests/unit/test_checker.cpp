#include <doctest.h>

#include <random>

#include "diskcert/checker.hpp"
#include "form_oracle.hpp"

using namespace diskcert;

namespace {

Certificate fixture() { return read_certificate_file(DISKCERT_DATA_DIR "/reference_certificate.json"); }

// Validity of a certificate decided from scratch with the polynomial oracle.
bool oracle_valid(const Certificate& cert) {
  if (cert.theta_star.sign() <= 0 || cert.theta_star > rat_parse("5901/10000")) return false;
  if (cert.entries.empty()) return false;
  int prev_m = 0;
  for (const auto& e : cert.entries) {
    if (e.m <= prev_m || e.coeffs.size() != static_cast<std::size_t>(cert.basis_dim) + 1) return false;
    prev_m = e.m;
    if (e.b_left >= e.b_right || e.coeffs[0] != Rational(1)) return false;
    const Rational left = oracle::form(e.coeffs, e.m, Rational(e.b_left), cert.theta_star);
    const Rational right = oracle::form(e.coeffs, e.m, Rational(e.b_right), cert.theta_star);
    if (left.sign() >= 0 || right.sign() >= 0) return false;
    if (e.left_value && *e.left_value != left) return false;
    if (e.right_value && *e.right_value != right) return false;
    // Leading coefficient of the parabola in b: the norm of r u / 2.
    if (oracle::norm(e.coeffs, e.m + 1).sign() <= 0) return false;
  }
  if (!(Rational(cert.entries.front().b_left) < Rational(8) * cert.theta_star)) return false;
  for (std::size_t i = 1; i < cert.entries.size(); ++i) {
    if (cert.entries[i].b_left > cert.entries[i - 1].b_right) return false;
  }
  return cert.entries.back().b_right >= cert.coverage_target;
}

bool checker_verdict(const Certificate& cert) {
  try {
    return check_certificate(cert).overall;
  } catch (const CertificateError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("constant state limit") {
  CHECK(constant_state_limit(rat_parse("5901/10000")) == rat_parse("5901/1250"));
  CHECK(constant_state_limit(rat_parse("1/2")) == Rational(4));
  CHECK(constant_state_limit(rat_parse("1/8")) == Rational(1));
}

TEST_CASE("reference certificate passes") {
  const Certificate cert = fixture();
  REQUIRE(cert.entries.size() == 56);
  const CheckReport report = check_certificate(cert);
  CHECK(report.theta_ok);
  CHECK(report.coverage.passed);
  CHECK(report.overall);
  CHECK(report.intervals[0].left_value == rat_parse("-6193251389/8944320000000"));
  CHECK(oracle_valid(cert));
}

TEST_CASE("endpoint values match the oracle and the midpoints are negative") {
  const Certificate cert = fixture();
  for (const auto& e : cert.entries) {
    const IntervalVerdict v = verify_interval(e, cert.theta_star, cert.basis_dim);
    CHECK(v.left_value == oracle::form(e.coeffs, e.m, Rational(e.b_left), cert.theta_star));
    CHECK(v.right_value == oracle::form(e.coeffs, e.m, Rational(e.b_right), cert.theta_star));
    const Rational mid = (Rational(e.b_left) + Rational(e.b_right)) / Rational(2);
    CHECK(oracle::form(e.coeffs, e.m, mid, cert.theta_star).sign() < 0);
  }
}

TEST_CASE("single-row tampers") {
  const Certificate cert = fixture();
  CertifiedInterval row = cert.entries[0];

  CertifiedInterval flipped = row;
  flipped.left_value = -*row.left_value;
  const IntervalVerdict vf = verify_interval(flipped, cert.theta_star, 8);
  CHECK_FALSE(vf.passed());
  CHECK_FALSE(vf.left_matches);

  CertifiedInterval widened = row;
  widened.b_left = 2;
  widened.left_value.reset();
  const bool exact_negative = oracle::form(row.coeffs, 1, Rational(2), cert.theta_star).sign() < 0;
  CHECK(verify_interval(widened, cert.theta_star, 8).passed() == exact_negative);

  CertifiedInterval stripped = row;
  stripped.left_value.reset();
  stripped.right_value.reset();
  CHECK(verify_interval(stripped, cert.theta_star, 8).passed());
}

TEST_CASE("coverage gaps and edges") {
  Certificate cert = fixture();
  cert.entries.erase(cert.entries.begin() + 1);
  const CoverageVerdict gap = verify_coverage(cert);
  CHECK_FALSE(gap.passed);
  REQUIRE(gap.gap.has_value());
  CHECK(gap.gap->first == 7);
  CHECK(gap.gap->second == 9);
  CHECK(gap.detail.find("gap between 7 and 9") != std::string::npos);

  Certificate one;
  one.entries.push_back(CertifiedInterval{1, 3, 131, {}, {}, {}});
  CHECK(verify_coverage(one).passed);

  Certificate empty;
  CHECK_FALSE(verify_coverage(empty).passed);
  CHECK_FALSE(check_certificate(empty).overall);

  Certificate late = one;
  late.entries[0].b_left = 5;
  CHECK_FALSE(verify_coverage(late).passed);

  Certificate shortfall = one;
  shortfall.entries[0].b_right = 130;
  CHECK_FALSE(verify_coverage(shortfall).passed);
}

TEST_CASE("theta gate") {
  Certificate cert = fixture();
  cert.theta_star = rat_parse("6000/10000");
  const CheckReport report = check_certificate(cert);
  CHECK_FALSE(report.theta_ok);
  CHECK_FALSE(report.overall);
}

TEST_CASE("malformed certificates throw") {
  Certificate cert = fixture();
  cert.entries[3].coeffs.pop_back();
  CHECK_THROWS_AS(check_certificate(cert), CertificateError);
  Certificate order = fixture();
  std::swap(order.entries[4], order.entries[5]);
  CHECK_THROWS_AS(check_certificate(order), CertificateError);
}

TEST_CASE("checker is idempotent") {
  const Certificate cert = fixture();
  CHECK(check_certificate(cert).format() == check_certificate(cert).format());
}

TEST_CASE("randomized tampers agree with exact recomputation") {
  const Certificate base = fixture();
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> pick_row(0, base.entries.size() - 1);
  std::uniform_int_distribution<int> pick_kind(0, 5);
  int flipped = 0;
  constexpr int kTrials = 60;
  for (int trial = 0; trial < kTrials; ++trial) {
    Certificate cert = base;
    auto& e = cert.entries[pick_row(rng)];
    const int kind = pick_kind(rng);
    switch (kind) {
      case 0:
        e.left_value = -*e.left_value;
        break;
      case 1:
        e.right_value = -*e.right_value;
        break;
      case 2: {
        std::uniform_int_distribution<std::size_t> j(0, e.coeffs.size() - 1);
        e.coeffs[j(rng)] += rat_parse(rng() % 2 ? "1/1000000" : "-1/1000000");
        break;
      }
      case 3:
        e.b_left -= 1;
        break;
      case 4:
        e.b_right += 1;
        break;
      default: {
        // Perturb, then drop the stored values so only the inequalities decide.
        std::uniform_int_distribution<std::size_t> j(1, e.coeffs.size() - 1);
        e.coeffs[j(rng)] += rat_parse("1/1000000");
        e.left_value.reset();
        e.right_value.reset();
        break;
      }
    }
    const bool verdict = checker_verdict(cert);
    INFO("trial " << trial << " kind " << kind << " m=" << e.m);
    CHECK(verdict == oracle_valid(cert));
    if (!verdict) ++flipped;
  }
  // Sign flips and stored-value perturbations always fail.
  CHECK(flipped >= kTrials / 2);
}
