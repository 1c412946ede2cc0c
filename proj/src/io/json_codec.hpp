#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gadget/gadget.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant::io {

using Json = nlohmann::ordered_json;

// Syntax errors carry the line and column of the failure.
Json parse_text(std::string_view text, const std::string& source);

// "p/q" strings, integers, or decimals; JSON floats convert exactly.
Rational rational_from_json(const Json& j, const std::string& field);

// {"q", "arity", "values"} in linear index order, last input fastest.
Signature<Rational> signature_from_json(const Json& j, const std::string& field);

// An array of signatures, or {"signatures": [...]}.
std::vector<Signature<Rational>> set_from_json(const Json& j);

// Per left signature, which side of a bipartite grid it may occupy (0 or 1).
struct PairFile {
  SimilarPair<Rational> pair;
  std::optional<std::vector<int>> sides;
};

// {"left": [...], "right": [...], "correspondence"?, "bipartite"?}
PairFile pair_from_json(const Json& j);

// {"signatures": {id: Signature}, "vertices": [{"sig", "ports"}], "edges"?,
// "loops"?, "left"?, "right"?}; "right" lists r_0..r_{d-1}.
Gadget<Rational> grid_from_json(const Json& j);

Matrix<Rational> matrix_from_json(const Json& j, const std::string& field);

template <Scalar T>
Json scalar_to_json(const T& v) {
  if constexpr (is_exact_v<T>) return format_rational(v);
  else return v;
}

template <Scalar T>
Json values_to_json(const std::vector<T>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(scalar_to_json(v));
  return out;
}

template <Scalar T>
Json signature_to_json(const Signature<T>& f) {
  return Json{{"q", f.domain()}, {"arity", f.arity()}, {"values", values_to_json(f.values())}};
}

template <Scalar T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar T>
Json gadget_to_json(const Gadget<T>& k) {
  Json sigs = Json::object();
  for (std::size_t i = 0; i < k.table().size(); ++i) sigs[std::to_string(i)] = signature_to_json(k.table()[i]);
  Json vertices = Json::array();
  for (const auto& v : k.vertices()) vertices.push_back(Json{{"sig", std::to_string(v.signature)}, {"ports", v.ports}});
  Json edges = Json::array();
  for (int e = 0; e < k.edge_count(); ++e) edges.push_back(e);
  Json left = Json::array(), right = Json::array();
  for (int i = 0; i < k.m(); ++i) left.push_back(k.left_edge(i));
  for (int j = 0; j < k.d(); ++j) right.push_back(k.right_edge(j));
  return Json{{"signatures", sigs}, {"vertices", vertices}, {"edges", edges}, {"loops", k.loops()},
              {"left", left},       {"right", right}};
}

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace holant::io
