#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "holant/holant.h"

using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(HOLANT_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json take(char* raw) {
  REQUIRE(raw != nullptr);
  Json j = Json::parse(raw);
  holant_string_free(raw);
  return j;
}

}  // namespace

TEST_CASE("grid evaluation through the C API") {
  holant_grid* g = nullptr;
  REQUIRE(holant_grid_parse(data("loop.json").c_str(), &g) == HOLANT_OK);
  char* out = nullptr;
  REQUIRE(holant_grid_eval(g, HOLANT_EXACT, &out) == HOLANT_OK);
  CHECK(take(out)["value"] == "3");
  REQUIRE(holant_grid_eval(g, HOLANT_FLOAT, &out) == HOLANT_OK);
  CHECK(take(out)["value"] == 3.0);
  holant_grid_free(g);
}

TEST_CASE("errors map to status codes with a message") {
  holant_grid* g = nullptr;
  CHECK(holant_grid_parse("{not json", &g) == HOLANT_E_SCHEMA);
  CHECK(g == nullptr);
  CHECK(std::string(holant_last_error()).find("grid:1:") != std::string::npos);
  holant_pair* p = nullptr;
  CHECK(holant_pair_parse(R"({"left": [{"q": 2, "arity": 1, "values": [1, 0]}], "right": []})", &p) ==
        HOLANT_E_INVARIANT);
  CHECK(std::string(holant_last_error()).find("similar-pair violation") != std::string::npos);
  CHECK(holant_grid_eval(nullptr, HOLANT_EXACT, nullptr) == HOLANT_E_INVALID_ARGUMENT);
  CHECK(std::string(holant_status_name(HOLANT_E_NUMERIC)) == "numeric");
  // success clears the message
  REQUIRE(holant_grid_parse(data("loop.json").c_str(), &g) == HOLANT_OK);
  CHECK(std::string(holant_last_error()).empty());
  holant_grid_free(g);
}

TEST_CASE("bipartite-blind pair through the C API") {
  holant_pair* p = nullptr;
  REQUIRE(holant_pair_parse(data("bipartite_blind.json").c_str(), &p) == HOLANT_OK);
  holant_indist_options o;
  holant_indist_options_default(&o);
  o.max_vertices = 2;
  o.max_witnesses = 100;
  char* out = nullptr;
  int distinguished = 0;
  REQUIRE(holant_indist(p, &o, &out, &distinguished) == HOLANT_OK);
  CHECK(distinguished == 1);
  bool found = false;
  const auto verdict = take(out);
  for (const auto& w : verdict["witnesses"])
    if (w["left_value"] == "11" && w["right_value"] == "6") found = true;
  CHECK(found);

  o.bipartite = 1;
  o.max_vertices = 6;
  o.max_total_degree = 16;
  o.max_witnesses = 1;
  REQUIRE(holant_indist(p, &o, &out, &distinguished) == HOLANT_OK);
  CHECK(distinguished == 0);
  CHECK(take(out)["outcome"] == "no_counterexample_within_budget");
  holant_pair_free(p);
}

TEST_CASE("odeco and ortho through the C API") {
  holant_set* s = nullptr;
  REQUIRE(holant_set_parse(data("geneq_rot.json").c_str(), &s) == HOLANT_OK);
  char* out = nullptr;
  int ok = 0;
  REQUIRE(holant_odeco_decompose(s, 1e-8, 0, &out, &ok) == HOLANT_OK);
  CHECK(ok == 1);
  CHECK(take(out)["residual"].get<double>() <= 1e-8);
  REQUIRE(holant_odeco_check(s, 1e-8, &out, &ok) == HOLANT_OK);
  CHECK(take(out)["star_symmetric"] == true);
  holant_set_free(s);

  holant_pair* p = nullptr;
  REQUIRE(holant_pair_parse(data("geneq_pair.json").c_str(), &p) == HOLANT_OK);
  int accepted = 0;
  REQUIRE(holant_ortho_verify(p, data("geneq_h.json").c_str(), 1e-8, HOLANT_EXACT, &out, &accepted) == HOLANT_OK);
  CHECK(accepted == 1);
  CHECK(take(out)["certificate"]["residual"] == 0.0);
  REQUIRE(holant_ortho_verify(p, "[[1, 0], [0, 1]]", 1e-8, HOLANT_EXACT, &out, &accepted) == HOLANT_OK);
  CHECK(accepted == 0);
  take(out);
  holant_search_options so;
  holant_search_options_default(&so);
  int found = 0;
  REQUIRE(holant_ortho_search(p, &so, &out, &found) == HOLANT_OK);
  CHECK(found == 1);
  CHECK(take(out)["certificate"]["residual"].get<double>() <= 1e-8);
  holant_pair_free(p);
}

TEST_CASE("span and hom through the C API") {
  holant_set* s = nullptr;
  REQUIRE(holant_set_parse(R"({"q": 2, "signatures": []})", &s) == HOLANT_OK);
  char* out = nullptr;
  REQUIRE(holant_span(s, 1, 1, 0, 0, HOLANT_EXACT, &out) == HOLANT_OK);
  CHECK(take(out)["dimension"] == 1);  // the wire alone
  holant_set_free(s);

  int differ = 0;
  // C6 against two disjoint triangles
  auto cycle_adj = [](std::initializer_list<std::pair<int, int>> edges) {
    Json m = Json::array();
    for (int i = 0; i < 6; ++i) m.push_back(Json::array({0, 0, 0, 0, 0, 0}));
    for (auto [a, b] : edges) m[a][b] = m[b][a] = 1;
    return m;
  };
  Json in{{"x", cycle_adj({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})},
          {"y", cycle_adj({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})}};
  REQUIRE(holant_hom(in.dump().c_str(), 3, 3, HOLANT_EXACT, &out, &differ) == HOLANT_OK);
  auto j = take(out);
  CHECK(differ == 1);
  CHECK(j["cycles"][2]["x"] == "0");
  CHECK(j["cycles"][2]["y"] == "12");
}

TEST_CASE("digest is FNV-1a") {
  CHECK(holant_digest("", 0) == 14695981039346656037ull);
  CHECK(holant_digest("a", 1) == 0xaf63dc4c8601ec8cull);
}
