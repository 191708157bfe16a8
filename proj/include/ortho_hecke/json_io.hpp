#pragma once

// JSON matrix literals, the one wire format shared by the CLI and fixtures:
//   {"field": "q" | "fp:<p>", "rows": [["1/2","0"],["3","-1"]]}
// Rational entries are "num/den" strings; prime-field entries are integers
// reduced mod p on load.

#include "matrix.hpp"

#include <json.hpp>

#include <string>

namespace ortho_hecke {

using Json = nlohmann::json;

inline FieldSpec field_of_json(const Json& j) {
  if (!j.contains("field") || !j["field"].is_string())
    throw std::invalid_argument("matrix literal: missing string member 'field'");
  return FieldSpec::parse(j["field"].get<std::string>());
}

template <class S>
Mat<S> matrix_from_json(const Json& j, const FieldSpec& field) {
  if (!j.contains("rows") || !j["rows"].is_array())
    throw std::invalid_argument("matrix literal: missing array member 'rows'");
  const auto& rows = j["rows"];
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  Eigen::Index n = 0;
  if (m > 0) n = static_cast<Eigen::Index>(rows[0].size());
  Mat<S> out(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw std::invalid_argument("matrix literal: ragged rows");
    for (Eigen::Index jx = 0; jx < n; ++jx) {
      const std::string cell = rows[i][jx].is_string()
                                   ? rows[i][jx].template get<std::string>()
                                   : rows[i][jx].dump();
      if constexpr (std::is_same_v<S, Rat>) {
        out(i, jx) = parse_scalar_rat(cell);
      } else {
        out(i, jx) = parse_scalar_fp(cell, field.p);
      }
    }
  }
  return out;
}

template <class S>
Json matrix_to_json(const Mat<S>& m, const FieldSpec& field) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"field", field.to_string()}, {"rows", std::move(rows)}};
}

}  // namespace ortho_hecke
