#include "simspec/galois/serialize.hpp"

#include "simspec/error.hpp"

namespace simspec::galois {

nlohmann::json field_to_json(Field f) {
  return {{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const nlohmann::json& j) {
  try {
    Field f = make_field(j.at("p").get<std::uint64_t>(), j.at("k").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint64_t>>() != f.modulus()) {
      fail(ErrorKind::ParseError, "modulus is not the canonical one for " + f.name());
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

nlohmann::json element_to_json(const FieldElement& a) { return a.coeffs(); }

FieldElement element_from_json(Field f, const nlohmann::json& j) {
  std::vector<std::uint64_t> c;
  try {
    if (j.is_number_integer()) {
      return f.from_integer(j.get<std::int64_t>());
    }
    c = j.get<std::vector<std::uint64_t>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (c.size() > f.degree()) fail(ErrorKind::ParseError, "too many coefficients for " + f.name());
  for (auto v : c) {
    if (v >= f.characteristic()) fail(ErrorKind::ParseError, "coefficient out of range");
  }
  c.resize(f.degree(), 0);
  return f.from_coeffs(c);
}

nlohmann::json polynomial_to_json(const Polynomial& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : f.coeffs()) out.push_back(element_to_json(c));
  return out;
}

Polynomial polynomial_from_json(Field f, const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "polynomial must be an array of coefficients");
  std::vector<FieldElement> c;
  for (const auto& x : j) c.push_back(element_from_json(f, x));
  return Polynomial(f, c);
}

}  // namespace simspec::galois
