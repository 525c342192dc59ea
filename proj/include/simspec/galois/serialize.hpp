#pragma once

#include "json.hpp"
#include "simspec/galois/field.hpp"
#include "simspec/galois/polynomial.hpp"

namespace simspec::galois {

/// {p, k, modulus}
nlohmann::json field_to_json(Field f);
Field field_from_json(const nlohmann::json& j);

/// Coefficient array over GF(p), little-endian by degree.
nlohmann::json element_to_json(const FieldElement& a);
FieldElement element_from_json(Field f, const nlohmann::json& j);

/// Array of element encodings, constant term first.
nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(Field f, const nlohmann::json& j);

}  // namespace simspec::galois
