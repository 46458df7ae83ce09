#pragma once

#include <span>

#include "json.hpp"

#include "altruns/polynomial.hpp"
#include "altruns/verify.hpp"

namespace altruns {

/// {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
nlohmann::json polynomial_to_json(const IntPolynomial& f);
/// Accepts decimal strings or JSON integers. Throws Error{parse_error}.
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(std::span<const VerificationReport> reports);

}  // namespace altruns
