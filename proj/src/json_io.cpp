#include "qneg/json_io.hpp"

#include <stdexcept>

namespace qneg {

nlohmann::json laurent_to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return {{"valuation", p.valuation()}, {"coefficients", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("valuation") || !j.contains("coefficients") ||
      !j["valuation"].is_number_integer() || !j["coefficients"].is_array()) {
    throw std::invalid_argument("Laurent JSON needs integer valuation and coefficient array");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : j["coefficients"]) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad decimal coefficient: " + c.get<std::string>());
    }
    coeffs.push_back(std::move(v));
  }
  const auto valuation = j["valuation"].get<Exponent>();
  if (coeffs.empty() ? valuation != 0
                     : (sgn(coeffs.front()) == 0 || sgn(coeffs.back()) == 0)) {
    throw std::invalid_argument("Laurent JSON is not in canonical form");
  }
  return LaurentPoly(valuation, std::move(coeffs));
}

}  // namespace qneg
