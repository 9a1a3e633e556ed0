#pragma once

#include <string>

#include <json.hpp>

#include "gammaq/const_expr.hpp"
#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/verifier.hpp"

namespace gammaq {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Term array in canonical display order:
/// [{"coeff":"1/6","gamma":0,"log2":0,"pi_half":4,"zeta":{"3":1}}, ...]
Json const_expr_json(const ConstExpr& e);

/// Entry array by ascending pi exponent: [{"pi_exp":"2","coeff":"1/6"}, ...]
/// (pi_exp is the exponent of pi as a half-integer string).
Json pi_vector_json(const PiVector& v);

Json certificate_json(const CertificateReport& rep, const std::string& command);

Json theorem2_json(const Theorem2Report& rep);

/// Render a report as the CLI's text format.
std::string certificate_text(const CertificateReport& rep);
std::string theorem2_text(const Theorem2Report& rep);

} // namespace gammaq
