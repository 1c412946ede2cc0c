#include "io/json_codec.hpp"

#include <cmath>
#include <map>

namespace holant::io {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  fail(ErrorCode::schema, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) schema_error(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

int int_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) schema_error(field, "expected an integer");
  return j.get<int>();
}

// Edge references may be integers or strings; both map to the same label text.
std::string ref_text(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  schema_error(field, "expected an integer or string reference");
}

}  // namespace

Json parse_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // count lines up to the failing byte
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorCode::schema, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(field, e.what());
    }
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
    return Rational(std::to_string(j.get<long long>()));
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) schema_error(field, "non-finite number");
    return Rational(d);
  }
  schema_error(field, "expected a number or a \"p/q\" string");
}

Signature<Rational> signature_from_json(const Json& j, const std::string& field) {
  const int q = int_from_json(member(j, "q", field), field + ".q");
  const int n = int_from_json(member(j, "arity", field), field + ".arity");
  if (q < 1) schema_error(field + ".q", "must be positive");
  if (n < 0) schema_error(field + ".arity", "must be non-negative");
  if (n > 0 && static_cast<double>(n) * std::log2(static_cast<double>(q)) > 26)
    schema_error(field, "q^n too large");
  const auto& values = member(j, "values", field);
  if (!values.is_array()) schema_error(field + ".values", "expected an array");
  const std::size_t want = ipow(q, n);
  if (values.size() != want)
    schema_error(field + ".values", "expected q^n = " + std::to_string(want) + " entries (q = " + std::to_string(q) +
                                        ", n = " + std::to_string(n) + "), got " + std::to_string(values.size()));
  std::vector<Rational> v;
  v.reserve(want);
  for (std::size_t i = 0; i < values.size(); ++i)
    v.push_back(rational_from_json(values[i], field + ".values[" + std::to_string(i) + "]"));
  return Signature<Rational>(q, n, std::move(v));
}

std::vector<Signature<Rational>> set_from_json(const Json& j) {
  const Json* arr = &j;
  std::string field = "";
  if (j.is_object()) {
    arr = &member(j, "signatures", "");
    field = "signatures";
  }
  if (!arr->is_array()) schema_error(field.empty() ? "(root)" : field, "expected an array of signatures");
  std::vector<Signature<Rational>> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(signature_from_json((*arr)[i], field + "[" + std::to_string(i) + "]"));
  for (std::size_t i = 1; i < out.size(); ++i)
    require(out[i].domain() == out[0].domain(), ErrorCode::invariant,
            "signature " + std::to_string(i) + " has domain " + std::to_string(out[i].domain()) + ", expected " +
                std::to_string(out[0].domain()));
  return out;
}

PairFile pair_from_json(const Json& j) {
  auto side = [&](const char* key) {
    const auto& arr = member(j, key, "");
    if (!arr.is_array()) schema_error(key, "expected an array of signatures");
    std::vector<Signature<Rational>> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(signature_from_json(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
  };
  auto left = side("left");
  auto right = side("right");
  std::vector<int> corr;
  if (j.contains("correspondence")) {
    const auto& c = j["correspondence"];
    if (!c.is_array()) schema_error("correspondence", "expected an array of indices");
    for (std::size_t i = 0; i < c.size(); ++i) corr.push_back(int_from_json(c[i], "correspondence[" + std::to_string(i) + "]"));
  }
  PairFile out{SimilarPair<Rational>(std::move(left), std::move(right), std::move(corr)), std::nullopt};
  if (j.contains("bipartite")) {
    const auto& b = j["bipartite"];
    if (!b.is_array() || b.size() != out.pair.size())
      schema_error("bipartite", "expected one side (0 or 1) per left signature");
    std::vector<int> sides;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int s = int_from_json(b[i], "bipartite[" + std::to_string(i) + "]");
      if (s != 0 && s != 1) schema_error("bipartite[" + std::to_string(i) + "]", "side must be 0 or 1");
      sides.push_back(s);
    }
    out.sides = std::move(sides);
  }
  return out;
}

Gadget<Rational> grid_from_json(const Json& j) {
  const auto& sigs = member(j, "signatures", "");
  if (!sigs.is_object()) schema_error("signatures", "expected an object keyed by signature id");
  std::vector<Signature<Rational>> table;
  std::map<std::string, int> sig_index;
  for (auto it = sigs.begin(); it != sigs.end(); ++it) {
    sig_index[it.key()] = static_cast<int>(table.size());
    table.push_back(signature_from_json(it.value(), "signatures." + it.key()));
  }
  int q = 0;
  if (j.contains("q")) q = int_from_json(j["q"], "q");
  for (const auto& f : table) {
    if (q == 0) q = f.domain();
    require(f.domain() == q, ErrorCode::invariant, "grid signatures must share one domain");
  }
  if (q == 0) schema_error("q", "needed when the grid has no signatures");

  std::map<std::string, int> edge_id;
  std::map<int, int> uses;
  const bool declared = j.contains("edges");
  if (declared) {
    const auto& edges = j["edges"];
    if (!edges.is_array()) schema_error("edges", "expected an array of edge ids");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto name = ref_text(edges[i], "edges[" + std::to_string(i) + "]");
      if (edge_id.count(name)) schema_error("edges[" + std::to_string(i) + "]", "duplicate edge id '" + name + "'");
      edge_id.emplace(name, static_cast<int>(edge_id.size()));
    }
  }
  auto edge_ref = [&](const Json& r, const std::string& field) {
    auto name = ref_text(r, field);
    auto it = edge_id.find(name);
    if (it == edge_id.end()) {
      if (declared) schema_error(field, "undeclared edge '" + name + "'");
      it = edge_id.emplace(name, static_cast<int>(edge_id.size())).first;
    }
    ++uses[it->second];
    return it->second;
  };

  std::vector<Vertex> vertices;
  if (j.contains("vertices")) {
    const auto& vs = j["vertices"];
    if (!vs.is_array()) schema_error("vertices", "expected an array");
    for (std::size_t v = 0; v < vs.size(); ++v) {
      const std::string field = "vertices[" + std::to_string(v) + "]";
      auto sid = ref_text(member(vs[v], "sig", field), field + ".sig");
      auto it = sig_index.find(sid);
      if (it == sig_index.end()) schema_error(field + ".sig", "unknown signature id '" + sid + "'");
      const auto& ports = member(vs[v], "ports", field);
      if (!ports.is_array()) schema_error(field + ".ports", "expected an array");
      const int arity = table[static_cast<std::size_t>(it->second)].arity();
      if (static_cast<int>(ports.size()) != arity)
        fail(ErrorCode::invariant, field + " has " + std::to_string(ports.size()) + " ports but signature '" + sid +
                                       "' has arity " + std::to_string(arity));
      Vertex vx{it->second, {}};
      for (std::size_t p = 0; p < ports.size(); ++p)
        vx.ports.push_back(edge_ref(ports[p], field + ".ports[" + std::to_string(p) + "]"));
      vertices.push_back(std::move(vx));
    }
  }
  std::vector<int> left, right;
  for (const char* key : {"left", "right"}) {
    if (!j.contains(key)) continue;
    const auto& arr = j[key];
    if (!arr.is_array()) schema_error(key, "expected an array of edge ids");
    for (std::size_t i = 0; i < arr.size(); ++i)
      (std::string(key) == "left" ? left : right)
          .push_back(edge_ref(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  for (const auto& [name, id] : edge_id)
    if (uses[id] != 2)
      fail(ErrorCode::invariant, "edge '" + name + "' is used " + std::to_string(uses[id]) + " times, expected 2");
  int loops = 0;
  if (j.contains("loops")) loops = int_from_json(j["loops"], "loops");
  if (loops < 0) schema_error("loops", "must be non-negative");
  std::vector<int> legs = left;
  legs.insert(legs.end(), right.rbegin(), right.rend());
  return Gadget<Rational>(q, std::move(table), std::move(vertices), std::move(legs), static_cast<int>(left.size()), loops);
}

Matrix<Rational> matrix_from_json(const Json& j, const std::string& field) {
  const Json* rows = &j;
  std::string f = field;
  if (j.is_object()) {
    rows = &member(j, "H", field);
    f = field + ".H";
  }
  if (!rows->is_array() || rows->empty()) schema_error(f, "expected a nonempty array of rows");
  const std::size_t n = rows->size();
  const std::size_t c = (*rows)[0].is_array() ? (*rows)[0].size() : 0;
  Matrix<Rational> m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array() || row.size() != c) schema_error(f + "[" + std::to_string(i) + "]", "rows must have equal length");
    for (std::size_t k = 0; k < c; ++k)
      m(i, k) = rational_from_json(row[k], f + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace holant::io
