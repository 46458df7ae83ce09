#include "altruns/json_io.hpp"

#include "altruns/error.hpp"

namespace altruns {

nlohmann::json polynomial_to_json(const IntPolynomial& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return nlohmann::json{{"coeffs", std::move(coeffs)}};
}

IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw Error(Errc::parse_error, "polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    BigInt value;
    if (c.is_string()) {
      if (value.set_str(c.get<std::string>(), 10) != 0) {
        throw Error(Errc::parse_error, "bad coefficient '" + c.get<std::string>() + "'");
      }
    } else if (c.is_number_integer()) {
      value = BigInt(c.dump(), 10);
    } else {
      throw Error(Errc::parse_error, "coefficient must be a decimal string or integer");
    }
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& w : report.witness) witness.push_back(format_window(w));
  return nlohmann::json{{"check", report.check_name},
                        {"parameters", report.parameters},
                        {"passed", report.passed},
                        {"details", report.details},
                        {"witness", std::move(witness)}};
}

nlohmann::json reports_to_json(std::span<const VerificationReport> reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

}  // namespace altruns
