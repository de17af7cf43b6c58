#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "diskcert/certificate.hpp"
#include "diskcert/cli.hpp"

using namespace diskcert;
namespace fs = std::filesystem;

namespace {

const std::string kFixture = DISKCERT_DATA_DIR "/reference_certificate.json";

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "diskcert_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_variant(const std::string& name, void (*edit)(Certificate&)) {
  Certificate cert = read_certificate_file(kFixture);
  edit(cert);
  const fs::path p = scratch(name);
  write_certificate_file(cert, p.string());
  return p.string();
}

}  // namespace

TEST_CASE("flag errors exit 2") {
  CHECK(run({}).code == kExitMalformed);
  CHECK(run({"frobnicate"}).code == kExitMalformed);
  CHECK(run({"check"}).code == kExitMalformed);
  CHECK(run({"theorem"}).code == kExitMalformed);
  CHECK(run({"certify", "--m-lo", "x"}).code == kExitMalformed);
  CHECK(run({"certify", "--theta-star", "0.59"}).code == kExitMalformed);
  CHECK(run({"largeb", "--xi0-lo", "abc"}).code == kExitMalformed);
  CHECK(run({"curves", "--b-max", "-1"}).code == kExitMalformed);
  CHECK(run({"degennes", "--points", "10"}).code == kExitMalformed);
  CHECK(run({"--help"}).code == kExitVerified);
}

TEST_CASE("certify") {
  const fs::path out = scratch("generated.json");
  const Run full = run({"certify", "--out", out.string()});
  CHECK(full.code == kExitVerified);
  const Certificate cert = read_certificate_file(out.string());
  CHECK(cert.entries.size() == 56);
  CHECK(cert.complete);
  CHECK(run({"check", "--cert", out.string()}).code == kExitVerified);

  const Run partial = run({"certify", "--m-hi", "3", "--out", scratch("partial.json").string()});
  CHECK(partial.code == kExitFailed);
  CHECK_FALSE(read_certificate_file(scratch("partial.json").string()).complete);

  const Run tiny = run({"certify", "--m-hi", "2", "--terms", "0"});
  CHECK(tiny.code == kExitFailed);
  CHECK(tiny.err.find("basis too small") != std::string::npos);
}

TEST_CASE("check") {
  CHECK(run({"check", "--cert", kFixture}).code == kExitVerified);

  const std::string gap = write_variant("gap.json", [](Certificate& c) { c.entries.erase(c.entries.begin() + 1); });
  const Run g = run({"check", "--cert", gap});
  CHECK(g.code == kExitFailed);
  CHECK(g.out.find("gap between 7 and 9") != std::string::npos);

  CHECK(run({"check", "--cert", kFixture, "--target", "140"}).code == kExitFailed);

  std::ifstream in(kFixture);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const fs::path truncated = scratch("truncated.json");
  std::ofstream(truncated) << text.substr(0, text.size() / 2);
  CHECK(run({"check", "--cert", truncated.string()}).code == kExitMalformed);
  CHECK(run({"check", "--cert", scratch("missing.json").string()}).code == kExitMalformed);
}

TEST_CASE("largeb") {
  const Run defaults = run({"largeb"});
  CHECK(defaults.code == kExitVerified);
  CHECK(defaults.out.find("A >= 253/1000") != std::string::npos);
  CHECK(run({"largeb", "--threshold", "100"}).code == kExitFailed);
  CHECK(run({"largeb", "--threshold", "131"}).code == kExitVerified);
  CHECK(run({"largeb", "--threshold", "0"}).code == kExitMalformed);
}

TEST_CASE("theorem") {
  const Run ok = run({"theorem", "--cert", kFixture});
  CHECK(ok.code == kExitVerified);
  const std::string no_overlap = write_variant("overlap.json", [](Certificate& c) {
    c.coverage_target = 130;
    c.large_b_threshold = 130;
  });
  CHECK(run({"theorem", "--cert", no_overlap}).code == kExitFailed);
  CHECK(run({"theorem", "--cert", scratch("missing.json").string()}).code == kExitMalformed);
}

TEST_CASE("degennes and curves") {
  const Run dg = run({"degennes"});
  CHECK(dg.code == kExitVerified);
  CHECK(dg.out.find("theta0 = 0.590106") != std::string::npos);

  const Run empty = run({"curves", "--b-max", "0"});
  CHECK(empty.code == kExitVerified);
  CHECK(empty.out == "b,m_star,lambda1,theta0_b,const_bound\n");

  const Run curves = run({"curves", "--b-max", "20"});
  CHECK(curves.code == kExitVerified);
  std::istringstream rows(curves.out);
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    double b, lambda, line_value;
    int m;
    char sep;
    std::istringstream row(line);
    row >> b >> sep >> m >> sep >> lambda >> sep >> line_value;
    CHECK(lambda < line_value);
    ++count;
  }
  CHECK(count == 20);
}
