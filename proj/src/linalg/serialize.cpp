#include "simspec/linalg/serialize.hpp"

#include "simspec/error.hpp"
#include "simspec/galois/serialize.hpp"

namespace simspec::linalg {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Raw v : m.raw()) entries.push_back(galois::element_to_json(FieldElement(m.field(), v)));
  return {{"field", galois::field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  try {
    Field f = galois::field_from_json(j.at("field"));
    auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) fail(ErrorKind::ParseError, "entry count does not match shape");
    std::vector<Raw> e;
    for (const auto& x : entries) e.push_back(galois::element_from_json(f, x).raw());
    return Matrix(f, rows, cols, std::move(e));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace simspec::linalg
