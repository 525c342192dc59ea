#pragma once

#include "json.hpp"
#include "simspec/linalg/matrix.hpp"

namespace simspec::linalg {

/// {field, rows, cols, entries}
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace simspec::linalg
