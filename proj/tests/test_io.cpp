#include <doctest.h>

#include <functional>

#include "io/json_codec.hpp"
#include "gadget/contraction.hpp"

using namespace holant;
using namespace holant::io;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("equality file parses to q = 2, n = 2") {
  auto f = signature_from_json(parse_text(R"({"q": 2, "arity": 2, "values": [1, 0, 0, 1]})", "eq2"), "eq2");
  CHECK(f.domain() == 2);
  CHECK(f.arity() == 2);
  CHECK(f.values() == std::vector<Rational>{1, 0, 0, 1});
}

TEST_CASE("wrong value count names q^n") {
  auto msg = error_of([] { signature_from_json(parse_text(R"({"q": 3, "arity": 2, "values": [1, 2]})", "s"), "s"); });
  CHECK(msg.find("q^n = 9") != std::string::npos);
}

TEST_CASE("mismatched arities raise a similar-pair violation") {
  auto msg = error_of([] {
    pair_from_json(parse_text(R"({"left": [{"q": 2, "arity": 1, "values": [1, 0]}],
                                 "right": [{"q": 2, "arity": 2, "values": [1, 0, 0, 1]}]})",
                              "p"));
  });
  CHECK(msg.find("similar-pair violation") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  auto msg = error_of([] { parse_text("{\n  \"q\": 2,\n  oops\n}", "bad.json"); });
  CHECK(msg.find("bad.json:3:") != std::string::npos);
}

TEST_CASE("rationals round-trip through strings and floats convert exactly") {
  CHECK(rational_from_json(Json("-3/6"), "x") == Rational(-1, 2));
  CHECK(rational_from_json(Json(0.5), "x") == Rational(1, 2));
  CHECK(rational_from_json(Json(7), "x") == 7);
  CHECK(scalar_to_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(!error_of([] { rational_from_json(Json(true), "x"); }).empty());
}

TEST_CASE("grid edges must be used twice and ports match arity") {
  const char* dangling = R"({"signatures": {"e": {"q": 2, "arity": 2, "values": [1, 0, 0, 1]}},
                             "vertices": [{"sig": "e", "ports": ["a", "b"]}]})";
  CHECK(error_of([&] { grid_from_json(parse_text(dangling, "g")); }).find("used 1 times") != std::string::npos);
  const char* ports = R"({"signatures": {"e": {"q": 2, "arity": 2, "values": [1, 0, 0, 1]}},
                          "vertices": [{"sig": "e", "ports": ["a"]}], "left": ["a"]})";
  CHECK(error_of([&] { grid_from_json(parse_text(ports, "g")); }).find("arity 2") != std::string::npos);
}

TEST_CASE("grid codec round-trips a gadget") {
  const char* text = R"({"signatures": {"f": {"q": 2, "arity": 3, "values": [1, 2, 3, 4, 5, 6, 7, 8]}},
                         "vertices": [{"sig": "f", "ports": [0, 1, 2]}], "left": [0], "right": [1, 2]})";
  auto k = grid_from_json(parse_text(text, "g"));
  auto back = grid_from_json(gadget_to_json(k));
  CHECK(gadget_matrix(k).matrix == gadget_matrix(back).matrix);
  // right lists r_0 first, so r_0 is the fastest column index
  CHECK(k.right_edge(0) == back.right_edge(0));
}

TEST_CASE("vertexless loops contribute q") {
  auto k = grid_from_json(parse_text(R"({"q": 3, "signatures": {}, "vertices": [], "loops": 2})", "g"));
  CHECK(holant_value(k) == 9);
}
