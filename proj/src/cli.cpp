#include "diskcert/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diskcert/branch_curves.hpp"
#include "diskcert/certificate.hpp"
#include "diskcert/certifier.hpp"
#include "diskcert/checker.hpp"
#include "diskcert/degennes.hpp"
#include "diskcert/largeb.hpp"

namespace diskcert {

namespace {

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

struct CertifyOptions {
  int m_lo = 1;
  int m_hi = 56;
  int terms = kDefaultTerms;
  std::string theta_star = "5901/10000";
  std::string out_path;
  int target = kDefaultCoverageTarget;
  int threshold = kDefaultLargeBThreshold;
};

struct CheckOptions {
  std::string cert_path;
  int target = 0;  // 0: keep the certificate's own target
};

struct LargeBOptions {
  long long threshold = kDefaultLargeBThreshold;
  std::string theta0_lo = "5901/10000", theta0_hi = "5902/10000";
  std::string xi0_lo = "7681/10000", xi0_hi = "7682/10000";
  std::string c1_lo = "253/1000", c1_hi = "255/1000";
};

struct DeGennesOptions {
  int points = 20000;
  double cutoff = 12.0;
};

struct CurvesOptions {
  int b_max = 140;
  int terms = kBranchTerms;
  std::string out_path;
};

int cmd_certify(const CertifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.m_lo < 1 || o.m_hi < o.m_lo || o.terms < 0 || o.target < o.threshold) {
    err << "certify: need 1 <= m-lo <= m-hi, terms >= 0 and target >= threshold\n";
    return kExitMalformed;
  }
  Rational theta;
  try {
    theta = rat_parse(o.theta_star);
  } catch (const ParseError& e) {
    err << "certify: " << e.what() << "\n";
    return kExitMalformed;
  }
  if (theta.sign() <= 0) {
    err << "certify: theta-star must be positive\n";
    return kExitMalformed;
  }

  const CertificationRun run = certify_range(o.m_lo, o.m_hi, o.terms, theta, o.target, o.threshold);
  for (const auto& f : run.failures) err << "m=" << f.m << ": " << f.reason << "\n";
  for (const auto& e : run.certificate.entries) {
    out << "m=" << e.m << " [" << e.b_left << ", " << e.b_right << "]\n";
  }
  const std::string json = certificate_to_json(run.certificate);
  if (o.out_path.empty()) {
    out << json;
  } else {
    write_certificate_file(run.certificate, o.out_path);
    out << "wrote " << o.out_path << "\n";
  }
  if (!run.certificate.complete) {
    const CoverageVerdict coverage = verify_coverage(run.certificate);
    err << "certificate incomplete";
    if (!run.failures.empty()) err << ": " << run.failures.size() << " angular momenta failed";
    if (!coverage.passed) err << "; coverage: " << coverage.detail;
    err << "\n";
    return kExitFailed;
  }
  return kExitVerified;
}

int run_check(const Certificate& cert, std::ostream& out) {
  const CheckReport report = check_certificate(cert);
  out << report.format();
  return report.overall ? kExitVerified : kExitFailed;
}

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  try {
    Certificate cert = read_certificate_file(o.cert_path);
    if (o.target > 0) cert.coverage_target = o.target;
    return run_check(cert, out);
  } catch (const CertificateError& e) {
    err << "check: " << e.what() << "\n";
    return kExitMalformed;
  }
}

SpectralConstants constants_from(const LargeBOptions& o) {
  SpectralConstants sc{Enclosure{rat_parse(o.theta0_lo), rat_parse(o.theta0_hi)},
                       Enclosure{rat_parse(o.xi0_lo), rat_parse(o.xi0_hi)},
                       Enclosure{rat_parse(o.c1_lo), rat_parse(o.c1_hi)}};
  sc.validate();
  return sc;
}

int print_large_b(const SpectralConstants& sc, long long threshold, std::ostream& out) {
  const LargeBReport r = large_b_report(sc, threshold);
  out << "A >= " << rat_format(r.coefficients.a_low) << " (" << decimal(r.coefficients.a_low) << ")\n"
      << "B <= " << rat_format(r.coefficients.b_high) << " (" << decimal(r.coefficients.b_high) << ")\n"
      << "C <= " << rat_format(r.coefficients.c_high) << " (" << decimal(r.coefficients.c_high) << ")\n"
      << "B^2 + 4AC <= " << rat_format(r.discriminant) << " (" << decimal(r.discriminant) << ")\n"
      << "sqrt(B^2 + 4AC) <= " << rat_format(r.sqrt_bound) << "\n"
      << "b0 <= " << rat_format(r.b0_bound) << " (" << decimal(r.b0_bound) << ")\n"
      << "b0 < " << threshold << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  return r.passed ? kExitVerified : kExitFailed;
}

int cmd_largeb(const LargeBOptions& o, std::ostream& out, std::ostream& err) {
  SpectralConstants sc;
  try {
    if (o.threshold < 1) throw std::invalid_argument("threshold must be a positive integer");
    sc = constants_from(o);
  } catch (const std::invalid_argument& e) {
    err << "largeb: " << e.what() << "\n";
    return kExitMalformed;
  }
  return print_large_b(sc, o.threshold, out);
}

int cmd_theorem(const std::string& cert_path, std::ostream& out, std::ostream& err) {
  Certificate cert;
  try {
    cert = read_certificate_file(cert_path);
    cert.validate_structure();
  } catch (const CertificateError& e) {
    err << "theorem: " << e.what() << "\n";
    return kExitMalformed;
  }
  out << "== small field: 0 < b <= " << cert.coverage_target << "\n";
  const int small = run_check(cert, out);
  out << "== large field: b > " << cert.large_b_threshold << "\n";
  const int large = print_large_b(SpectralConstants::defaults(), cert.large_b_threshold, out);
  const bool overlap = cert.coverage_target >= cert.large_b_threshold + 1;
  out << "== overlap: coverage_target " << cert.coverage_target << " >= large_b_threshold + 1 = "
      << cert.large_b_threshold + 1 << ": " << (overlap ? "PASS" : "FAIL") << "\n";
  const bool proved = small == kExitVerified && large == kExitVerified && overlap;
  out << (proved ? "theorem verified: lambda_1(b) < Theta_0 b for all b > 0\n"
                 : "theorem NOT verified\n");
  return proved ? kExitVerified : kExitFailed;
}

int cmd_degennes(const DeGennesOptions& o, std::ostream& out, std::ostream& err) {
  DeGennesResult r;
  try {
    r = solve_degennes(HalfLineGrid{o.cutoff, o.points});
  } catch (const std::invalid_argument& e) {
    err << "degennes: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "degennes: " << e.what() << "\n";
    return kExitFailed;
  }
  const double xi = r.xi0;
  const double c1 = r.c1;
  struct Check {
    const char* name;
    double deviation;
    double tolerance;
  };
  const Check checks[] = {
      {"|theta0 - 0.590106125|", std::abs(r.theta0 - 0.590106125), 1e-5},
      {"|phi0 - 0.8730|", std::abs(r.phi0 - 0.8730), 1e-3},
      {"|theta0 - xi0^2|", std::abs(r.theta0 - xi * xi), 1e-6},
      {"|T1 - xi0|", std::abs(r.moments[0] - xi), 1e-3},
      {"|T2 - 3/2 xi0^2|", std::abs(r.moments[1] - 1.5 * xi * xi), 1e-3},
      {"|T3 - (C1/2 + 5/2 xi0^3)|", std::abs(r.moments[2] - (c1 / 2 + 2.5 * xi * xi * xi)), 1e-3},
      {"|T4 - (3/8 + 35/8 xi0^4 + 7/8 C1 xi0)|",
       std::abs(r.moments[3] - (0.375 + 35.0 / 8 * std::pow(xi, 4) + 7.0 / 8 * c1 * xi)), 1e-3},
  };
  out << std::setprecision(10) << "theta0 = " << r.theta0 << "\nxi0 = " << r.xi0
      << "\nphi0 = " << r.phi0 << "\nC1 = " << r.c1 << "\n";
  for (std::size_t k = 0; k < r.moments.size(); ++k) out << "T" << k + 1 << " = " << r.moments[k] << "\n";
  bool ok = true;
  for (const auto& c : checks) {
    const bool pass = c.deviation <= c.tolerance;
    ok = ok && pass;
    out << std::setprecision(3) << c.name << " = " << c.deviation << " <= " << c.tolerance << ": "
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitVerified : kExitFailed;
}

int cmd_curves(const CurvesOptions& o, std::ostream& out, std::ostream& err) {
  if (o.b_max < 0 || o.terms < 1) {
    err << "curves: need b-max >= 0 and terms >= 1\n";
    return kExitMalformed;
  }
  std::vector<double> grid;
  for (int b = 1; b <= o.b_max; ++b) grid.push_back(b);
  const std::vector<BranchPoint> points = sweep(grid, default_m_max, o.terms);
  if (o.out_path.empty()) {
    write_branch_csv(out, points);
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "curves: cannot write " << o.out_path << "\n";
      return kExitMalformed;
    }
    write_branch_csv(file, points);
  }
  return kExitVerified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for lambda_1(b) < Theta_0 b on the unit disk", "diskcert"};
  app.require_subcommand(1);

  CertifyOptions certify;
  auto* certify_cmd = app.add_subcommand("certify", "Generate a small-field certificate");
  certify_cmd->add_option("--m-lo", certify.m_lo, "First angular momentum")->capture_default_str();
  certify_cmd->add_option("--m-hi", certify.m_hi, "Last angular momentum")->capture_default_str();
  certify_cmd->add_option("--terms", certify.terms, "Highest power N of (1 - r^2)")->capture_default_str();
  certify_cmd->add_option("--theta-star", certify.theta_star, "Rational theta*")->capture_default_str();
  certify_cmd->add_option("--target", certify.target, "Coverage target")->capture_default_str();
  certify_cmd->add_option("--threshold", certify.threshold, "Large-field threshold")->capture_default_str();
  certify_cmd->add_option("--out", certify.out_path, "Output JSON file (stdout when omitted)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Verify a certificate in exact arithmetic");
  check_cmd->add_option("--cert", check.cert_path, "Certificate JSON")->required();
  check_cmd->add_option("--target", check.target, "Override the coverage target");

  LargeBOptions largeb;
  auto* largeb_cmd = app.add_subcommand("largeb", "Verify the large-field threshold bound");
  largeb_cmd->add_option("--threshold", largeb.threshold, "Threshold to certify")->capture_default_str();
  largeb_cmd->add_option("--theta0-lo", largeb.theta0_lo)->capture_default_str();
  largeb_cmd->add_option("--theta0-hi", largeb.theta0_hi)->capture_default_str();
  largeb_cmd->add_option("--xi0-lo", largeb.xi0_lo)->capture_default_str();
  largeb_cmd->add_option("--xi0-hi", largeb.xi0_hi)->capture_default_str();
  largeb_cmd->add_option("--c1-lo", largeb.c1_lo)->capture_default_str();
  largeb_cmd->add_option("--c1-hi", largeb.c1_hi)->capture_default_str();

  std::string theorem_cert;
  auto* theorem_cmd = app.add_subcommand("theorem", "Check the small-field certificate, the large-field bound and their overlap");
  theorem_cmd->add_option("--cert", theorem_cert, "Certificate JSON")->required();

  DeGennesOptions degennes;
  auto* degennes_cmd = app.add_subcommand("degennes", "Validate the de Gennes constants numerically");
  degennes_cmd->add_option("--points", degennes.points, "Grid points")->capture_default_str();
  degennes_cmd->add_option("--cutoff", degennes.cutoff, "Domain cutoff T")->capture_default_str();

  CurvesOptions curves;
  auto* curves_cmd = app.add_subcommand("curves", "Emit branch eigenvalue data as CSV");
  curves_cmd->add_option("--b-max", curves.b_max, "Largest integer field strength")->capture_default_str();
  curves_cmd->add_option("--terms", curves.terms, "Basis size N")->capture_default_str();
  curves_cmd->add_option("--out", curves.out_path, "Output CSV (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  if (*certify_cmd) return cmd_certify(certify, out, err);
  if (*check_cmd) return cmd_check(check, out, err);
  if (*largeb_cmd) return cmd_largeb(largeb, out, err);
  if (*theorem_cmd) return cmd_theorem(theorem_cert, out, err);
  if (*degennes_cmd) return cmd_degennes(degennes, out, err);
  if (*curves_cmd) return cmd_curves(curves, out, err);
  return kExitMalformed;
}

}  // namespace diskcert
