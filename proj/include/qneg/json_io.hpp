#pragma once

#include "qneg/laurent.hpp"

#include "json.hpp"

#include <string_view>

namespace qneg {

/// Version tag carried at the top level of every JSON document.
inline constexpr std::string_view kJsonSchema = "qneg/1";

/// {"valuation": v, "coefficients": ["c0", "c1", ...]} in ascending exponent.
nlohmann::json laurent_to_json(const LaurentPoly& p);

/// Inverse of laurent_to_json. Rejects non-canonical input (zero at either
/// end of the coefficient list, or a nonzero valuation for the zero
/// polynomial) with std::invalid_argument.
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace qneg
