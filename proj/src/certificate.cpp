#include "diskcert/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace diskcert {

using nlohmann::json;

Rational default_theta_star() { return Rational(mpz_class(5901), mpz_class(10000)); }

void Certificate::validate_structure() const {
  if (theta_star.sign() <= 0) throw CertificateError("theta_star must be positive");
  if (basis_dim < 0) throw CertificateError("basis_dim must be non-negative");
  if (coverage_target < large_b_threshold) {
    throw CertificateError("coverage_target " + std::to_string(coverage_target) +
                           " is below large_b_threshold " + std::to_string(large_b_threshold));
  }
  int previous_m = 0;
  for (const auto& e : entries) {
    if (e.m < 1) throw CertificateError("entry with m=" + std::to_string(e.m) + " (need m >= 1)");
    if (e.m <= previous_m) {
      throw CertificateError("entries must be strictly increasing in m (m=" +
                             std::to_string(e.m) + " after m=" + std::to_string(previous_m) + ")");
    }
    previous_m = e.m;
    if (e.coeffs.size() != static_cast<std::size_t>(basis_dim) + 1) {
      throw CertificateError("entry m=" + std::to_string(e.m) + " has " +
                             std::to_string(e.coeffs.size()) + " coefficients, expected " +
                             std::to_string(basis_dim + 1));
    }
  }
}

namespace {

json interval_to_json(const CertifiedInterval& iv) {
  json coeffs = json::array();
  for (const auto& c : iv.coeffs) coeffs.push_back(rat_format(c));
  json j = {{"m", iv.m}, {"b_left", iv.b_left}, {"b_right", iv.b_right}, {"coeffs", coeffs}};
  if (iv.left_value) j["left_value"] = rat_format(*iv.left_value);
  if (iv.right_value) j["right_value"] = rat_format(*iv.right_value);
  return j;
}

Rational rational_field(const json& j, const char* key) {
  const json& value = j.at(key);
  if (!value.is_string()) throw CertificateError(std::string("field \"") + key + "\" must be a rational string");
  return rat_parse(value.get<std::string>());
}

template <typename Int>
Int integer_field(const json& j, const char* key) {
  const json& value = j.at(key);
  if (!value.is_number_integer()) throw CertificateError(std::string("field \"") + key + "\" must be an integer");
  return value.get<Int>();
}

CertifiedInterval interval_from_json(const json& j) {
  CertifiedInterval iv;
  iv.m = integer_field<int>(j, "m");
  iv.b_left = integer_field<long long>(j, "b_left");
  iv.b_right = integer_field<long long>(j, "b_right");
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw CertificateError("\"coeffs\" must be an array");
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw CertificateError("coefficients must be rational strings");
    iv.coeffs.push_back(rat_parse(c.get<std::string>()));
  }
  if (j.contains("left_value")) iv.left_value = rational_field(j, "left_value");
  if (j.contains("right_value")) iv.right_value = rational_field(j, "right_value");
  return iv;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, int indent) {
  json entries = json::array();
  for (const auto& e : cert.entries) entries.push_back(interval_to_json(e));
  const json j = {{"theta_star", rat_format(cert.theta_star)},
                  {"basis_dim", cert.basis_dim},
                  {"coverage_target", cert.coverage_target},
                  {"large_b_threshold", cert.large_b_threshold},
                  {"complete", cert.complete},
                  {"entries", entries}};
  return j.dump(indent) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw CertificateError("certificate must be a JSON object");
    Certificate cert;
    cert.theta_star = rational_field(j, "theta_star");
    cert.basis_dim = integer_field<int>(j, "basis_dim");
    cert.coverage_target = integer_field<int>(j, "coverage_target");
    cert.large_b_threshold = integer_field<int>(j, "large_b_threshold");
    const json& complete = j.at("complete");
    if (!complete.is_boolean()) throw CertificateError("\"complete\" must be a boolean");
    cert.complete = complete.get<bool>();
    const json& entries = j.at("entries");
    if (!entries.is_array()) throw CertificateError("\"entries\" must be an array");
    for (const auto& e : entries) cert.entries.push_back(interval_from_json(e));
    cert.validate_structure();
    return cert;
  } catch (const json::exception& e) {
    throw CertificateError(std::string("malformed certificate JSON: ") + e.what());
  } catch (const ParseError& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot open certificate file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return certificate_from_json(buffer.str());
}

void write_certificate_file(const Certificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write certificate file " + path);
  out << certificate_to_json(cert);
  if (!out) throw std::runtime_error("failed while writing " + path);
}

}  // namespace diskcert
