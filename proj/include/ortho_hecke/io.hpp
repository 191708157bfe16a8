#pragma once

// JSON input and output: matrix literals, submodules, quadratic spaces,
// bundles, and the report types.  Entries travel as strings ("num/den" over
// the rationals, integers mod p over prime fields) so nothing is lost to
// floating point anywhere.

#include "hecke.hpp"
#include "strata.hpp"
#include "tangent.hpp"

#include <json.hpp>

#include <string>

namespace ortho_hecke {

using Json = nlohmann::ordered_json;

template <class S>
S scalar_from_string(const std::string& text, const FieldSpec& field) {
  if constexpr (std::is_same_v<S, Fp>) return parse_scalar_fp(text, field.p);
  else return parse_scalar_rat(text);
}

template <class S>
Mat<S> matrix_from_json(const Json& rows, const FieldSpec& field) {
  if (!rows.is_array()) throw std::invalid_argument("matrix: 'rows' must be an array");
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  Eigen::Index n = 0;
  if (m > 0) {
    if (!rows[0].is_array()) throw std::invalid_argument("matrix: rows must be arrays");
    n = static_cast<Eigen::Index>(rows[0].size());
  }
  Mat<S> out(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("matrix: ragged rows");
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& cell = row[static_cast<std::size_t>(j)];
      std::string text;
      if (cell.is_string()) text = cell.get<std::string>();
      else if (cell.is_number_integer()) text = std::to_string(cell.get<long long>());
      else throw std::invalid_argument("matrix: entries must be strings or integers");
      out(i, j) = scalar_from_string<S>(text, field);
    }
  }
  return out;
}

template <class S>
Json matrix_to_json(const Mat<S>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// {"field": ..., "rows": ...} with an optional expected row count.
template <class S>
Mat<S> matrix_literal_from_json(const Json& doc, const FieldSpec& field) {
  if (!doc.is_object() || !doc.contains("rows"))
    throw std::invalid_argument("matrix literal: expected {\"field\", \"rows\"}");
  if (doc.contains("field")) {
    const FieldSpec inner = FieldSpec::parse(doc["field"].get<std::string>());
    if (!(inner == field)) throw std::invalid_argument("matrix literal: field mismatch");
  }
  return matrix_from_json<S>(doc["rows"], field);
}

template <class S>
Submodule<S> submodule_from_json(const Json& doc, const FieldSpec& field) {
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("basis"))
    throw std::invalid_argument("submodule: expected {\"r\", \"field\", \"basis\"}");
  const int r = doc["r"].get<int>();
  if (doc.contains("field")) {
    const FieldSpec inner = FieldSpec::parse(doc["field"].get<std::string>());
    if (!(inner == field)) throw std::invalid_argument("submodule: field mismatch");
  }
  const Mat<S> basis = matrix_from_json<S>(doc["basis"], field);
  if (basis.rows() != 2 * r) throw std::invalid_argument("submodule: basis must have 2r rows");
  return make_submodule(Ambient<S>{r, field}, basis);
}

template <class S>
QuadraticSpace<S> quad_space_from_json(const Json& doc, const FieldSpec& field) {
  if (!doc.is_object() || !doc.contains("r"))
    throw std::invalid_argument("quadratic space: expected {\"r\", \"field\", \"gram\"}");
  const int r = doc["r"].get<int>();
  if (doc.contains("gram") && doc["gram"].is_string()) {
    if (doc["gram"].get<std::string>() != "hyperbolic")
      throw std::invalid_argument("quadratic space: unknown gram keyword");
    return hyperbolic_space<S>(r, field);
  }
  if (!doc.contains("gram")) return hyperbolic_space<S>(r, field);
  return make_quadratic_space(r, field, matrix_from_json<S>(doc["gram"], field));
}

inline Json splitting_to_json(const SplittingType& t) {
  Json arr = Json::array();
  for (int a : t) arr.push_back(a);
  return arr;
}

template <class S>
Json stratum_report_to_json(const StratumReport<S>& rep) {
  Json out;
  out["i"] = rep.i;
  out["torsion_degree"] = rep.torsion_degree;
  if (rep.component) out["component"] = *rep.component;
  out["flag"] = Json{{"F", matrix_to_json(rep.flag.F)},
                     {"G", matrix_to_json(rep.flag.G)},
                     {"phi", matrix_to_json(rep.flag.phi)}};
  if (rep.skew)
    out["skew"] = Json{{"F", matrix_to_json(rep.skew->F)},
                       {"omega", matrix_to_json(rep.skew->omega)}};
  return out;
}

template <class S>
Json hecke_report_to_json(const HeckeReport<S>& rep) {
  Json out;
  out["input_type"] = splitting_to_json(rep.input_type);
  out["output_type"] = splitting_to_json(rep.output_type);
  out["gram_det_at_x"] = scalar_to_string(rep.gram_det_at_x);
  out["w2_in"] = rep.w2_in;
  out["w2_out"] = rep.w2_out;
  out["stratum_i"] = rep.stratum_i;
  out["two_step_type"] = splitting_to_json(rep.two_step_type);
  out["reciprocity_ok"] = rep.reciprocity_ok;
  return out;
}

inline Json tangent_report_to_json(const TangentReport& rep) {
  Json out;
  out["dim_hom0"] = rep.dim_hom0;
  out["expected_dim"] = rep.expected_dim;
  if (rep.skew_dim) out["skew_dim"] = *rep.skew_dim;
  if (rep.dual_skew_dim) out["dual_skew_dim"] = *rep.dual_skew_dim;
  if (rep.pairing_rank) out["pairing_rank"] = *rep.pairing_rank;
  return out;
}

inline Json census_to_json(const CensusResult& res) {
  Json out;
  out["r"] = res.r;
  out["p"] = res.p;
  Json rows = Json::array();
  // counts stay well under 2^63 at the supported ranks, so they are emitted
  // as plain JSON numbers
  for (const auto& row : res.rows) {
    Json j;
    j["i"] = row.i;
    j["count"] = row.count.convert_to<long long>();
    j["predicted"] = row.predicted.convert_to<long long>();
    j["component"] = row.component;
    rows.push_back(j);
  }
  out["strata"] = rows;
  if (res.brute_force_total) out["brute_force_total"] = res.brute_force_total->convert_to<long long>();
  return out;
}

inline std::string census_to_csv(const CensusResult& res) {
  std::string out = "r,p,i,component,count,predicted\n";
  for (const auto& row : res.rows) {
    out += std::to_string(res.r) + "," + std::to_string(res.p) + "," + std::to_string(row.i) +
           "," + std::to_string(row.component) + "," + row.count.str() + "," +
           row.predicted.str() + "\n";
  }
  return out;
}

}  // namespace ortho_hecke
