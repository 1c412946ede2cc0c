#include "holant/holant.h"

#include <cstring>
#include <new>
#include <string>

#include "indist/hom.hpp"
#include "indist/testers.hpp"
#include "io/json_codec.hpp"
#include "odeco/odeco.hpp"
#include "ortho/ortho.hpp"

using holant::Rational;
using holant::io::Json;

struct holant_grid {
  holant::Gadget<Rational> gadget;
};

struct holant_pair {
  holant::io::PairFile file;
};

struct holant_set {
  int q = 1;
  std::vector<holant::Signature<Rational>> signatures;
};

namespace {

thread_local std::string last_error;

holant_status status_for(holant::ErrorCode code) {
  using holant::ErrorCode;
  switch (code) {
    case ErrorCode::schema: return HOLANT_E_SCHEMA;
    case ErrorCode::invariant:
    case ErrorCode::arity_mismatch:
    case ErrorCode::domain_mismatch: return HOLANT_E_INVARIANT;
    case ErrorCode::not_symmetric:
    case ErrorCode::not_commuting: return HOLANT_E_NUMERIC;
    case ErrorCode::io: return HOLANT_E_IO;
    case ErrorCode::internal: return HOLANT_E_INTERNAL;
    case ErrorCode::invalid_argument:
    case ErrorCode::dimension_mismatch: return HOLANT_E_INVALID_ARGUMENT;
  }
  return HOLANT_E_INTERNAL;
}

template <class F>
holant_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HOLANT_OK;
  } catch (const holant::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HOLANT_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HOLANT_E_INTERNAL;
  }
}

void require_out(const void* p, const char* name) {
  holant::require(p != nullptr, holant::ErrorCode::invalid_argument, std::string(name) + " must not be null");
}

char* to_c_string(const Json& j) {
  const std::string s = j.dump();
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <holant::Scalar T>
Json verdict_json(const holant::IndistVerdict<T>& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back(Json{{"label", w.label},
                             {"left_value", holant::io::scalar_to_json(w.left_value)},
                             {"right_value", holant::io::scalar_to_json(w.right_value)},
                             {"grid", holant::io::gadget_to_json(w.grid)}});
  return Json{{"outcome", holant::to_string(v.outcome)},
              {"numerical", v.numerical},
              {"grids_checked", v.grids_checked},
              {"witnesses", witnesses}};
}

template <holant::Scalar T>
holant::IndistVerdict<T> run_indist(const holant::io::PairFile& file, const holant_indist_options& o) {
  const auto pair = holant::convert<T>(file.pair);
  holant::GridBudget budget;
  budget.max_vertices = o.max_vertices;
  budget.max_total_degree = o.max_total_degree;
  budget.validate();
  holant::IndistOptions io;
  io.tol = o.tol;
  io.max_witnesses = o.max_witnesses;
  io.workers = o.workers;
  switch (o.variant) {
    case HOLANT_INDIST_CSP: return holant::csp_indist(pair, budget, holant::CspVariant::all, io);
    case HOLANT_INDIST_CSP_EVEN: return holant::csp_indist(pair, budget, holant::CspVariant::even_degree, io);
    case HOLANT_INDIST_CYCLES: return holant::csp_indist(pair, budget, holant::CspVariant::cycles, io);
    case HOLANT_INDIST_PATHS: return holant::csp_indist(pair, budget, holant::CspVariant::paths, io);
    case HOLANT_INDIST_TRACE: return holant::trace_indist(pair, o.max_vertices, io);
    case HOLANT_INDIST_GENERAL: break;
    default: holant::fail(holant::ErrorCode::invalid_argument, "unknown indist variant");
  }
  if (!o.bipartite) return holant::holant_indist(pair, budget, io);
  holant::require(file.sides.has_value(), holant::ErrorCode::invalid_argument,
                  "bipartite testing needs a \"bipartite\" side list in the pair file");
  std::vector<holant::Signature<T>> l[2], r[2];
  const auto right = pair.aligned_right();
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const int s = (*file.sides)[i];
    l[s].push_back(pair.left()[i]);
    r[s].push_back(right[i]);
  }
  return holant::bipartite_indist(holant::SimilarPair<T>(l[0], r[0]), holant::SimilarPair<T>(l[1], r[1]), budget, io);
}

Json certificate_json(const holant::OrthoCertificate& c) {
  return Json{{"method", holant::to_string(c.method)},
              {"H", holant::io::matrix_to_json(c.h.matrix)},
              {"residuals", c.residuals},
              {"residual", c.residual},
              {"orthogonality", c.orthogonality}};
}

template <holant::Scalar T>
Json span_json(const holant_set& set, int m, int d, const holant::GridBudget& budget) {
  auto sigs = holant::convert<T>(set.signatures);
  auto span = holant::gadget_span<T>(sigs, set.q, m, d, budget);
  Json basis = Json::array();
  for (const auto& b : span.basis) basis.push_back(holant::io::matrix_to_json(b));
  return Json{{"m", m}, {"d", d}, {"gadgets", span.gadgets}, {"dimension", span.basis.size()}, {"basis", basis}};
}

template <holant::Scalar T>
bool same_value(const T& a, const T& b) {
  if constexpr (holant::is_exact_v<T>) return a == b;
  else return !holant::values_differ(a, b, 1e-9);
}

template <holant::Scalar T>
Json hom_json(const Json& in, int max_size, int max_cycle, bool& differ) {
  const auto x = holant::convert<T>(holant::io::matrix_from_json(in.at("x"), "x"));
  std::optional<holant::Matrix<T>> y;
  if (in.contains("y")) y = holant::convert<T>(holant::io::matrix_from_json(in["y"], "y"));
  bool profile_differs = false, cycles_differ = false;
  Json profile = Json::array();
  auto px = holant::hom_profile(x, max_size);
  std::vector<std::pair<std::string, T>> py;
  if (y) py = holant::hom_profile(*y, max_size);
  for (std::size_t i = 0; i < px.size(); ++i) {
    Json row{{"graph", px[i].first}, {"x", holant::io::scalar_to_json(px[i].second)}};
    if (y) {
      row["y"] = holant::io::scalar_to_json(py[i].second);
      profile_differs = profile_differs || !same_value(px[i].second, py[i].second);
    }
    profile.push_back(std::move(row));
  }
  // closed walks of length k: tr X^k
  Json cycles = Json::array();
  auto wx = x;
  std::optional<holant::Matrix<T>> wy = y;
  for (int k = 1; k <= max_cycle; ++k) {
    if (k > 1) {
      wx = wx * x;
      if (y) *wy = *wy * *y;
    }
    const T cx = holant::trace(wx);
    Json row{{"length", k}, {"x", holant::io::scalar_to_json(cx)}};
    if (y) {
      const T cy = holant::trace(*wy);
      row["y"] = holant::io::scalar_to_json(cy);
      cycles_differ = cycles_differ || !same_value(cx, cy);
    }
    cycles.push_back(std::move(row));
  }
  differ = profile_differs || cycles_differ;
  Json out{{"profile", profile}, {"cycles", cycles}};
  if (y) {
    out["profile_differs"] = profile_differs;
    out["cycles_differ"] = cycles_differ;
  }
  return out;
}

}  // namespace

extern "C" {

const char* holant_version(void) { return "0.1.0"; }

const char* holant_last_error(void) { return last_error.c_str(); }

const char* holant_status_name(holant_status status) {
  switch (status) {
    case HOLANT_OK: return "ok";
    case HOLANT_E_INVALID_ARGUMENT: return "invalid_argument";
    case HOLANT_E_SCHEMA: return "schema";
    case HOLANT_E_INVARIANT: return "invariant";
    case HOLANT_E_NUMERIC: return "numeric";
    case HOLANT_E_IO: return "io";
    case HOLANT_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void holant_string_free(char* s) { std::free(s); }

uint64_t holant_digest(const char* bytes, uint64_t length) {
  if (!bytes) return holant::io::fnv1a64({});
  return holant::io::fnv1a64(std::string_view(bytes, static_cast<std::size_t>(length)));
}

void holant_indist_options_default(holant_indist_options* o) {
  if (!o) return;
  holant::GridBudget b;
  holant::IndistOptions io;
  o->max_vertices = b.max_vertices;
  o->max_total_degree = b.max_total_degree;
  o->bipartite = 0;
  o->variant = HOLANT_INDIST_GENERAL;
  o->tol = io.tol;
  o->max_witnesses = io.max_witnesses;
  o->workers = io.workers;
  o->backend = HOLANT_EXACT;
}

void holant_search_options_default(holant_search_options* o) {
  if (!o) return;
  holant::HeuristicOptions h;
  o->restarts = h.restarts;
  o->iters = h.iters;
  o->seed = h.seed;
  o->tol = h.tol;
  o->workers = h.workers;
}

holant_status holant_grid_parse(const char* json, holant_grid** out) {
  return guarded([&] {
    require_out(json, "json");
    require_out(out, "out");
    *out = nullptr;
    auto g = holant::io::grid_from_json(holant::io::parse_text(json, "grid"));
    *out = new holant_grid{std::move(g)};
  });
}

void holant_grid_free(holant_grid* grid) { delete grid; }

holant_status holant_grid_eval(const holant_grid* grid, holant_backend backend, char** result) {
  return guarded([&] {
    require_out(grid, "grid");
    require_out(result, "result");
    Json value = backend == HOLANT_EXACT ? holant::io::scalar_to_json(holant::holant_value(grid->gadget))
                                         : holant::io::scalar_to_json(holant::holant_value(holant::convert<double>(grid->gadget)));
    *result = to_c_string(Json{{"value", value}});
  });
}

holant_status holant_grid_matrix(const holant_grid* grid, int m, int d, holant_backend backend, char** result) {
  return guarded([&] {
    require_out(grid, "grid");
    require_out(result, "result");
    const auto& g = grid->gadget;
    const int legs = static_cast<int>(g.legs().size());
    if (m < 0) {
      m = g.m();
      d = g.d();
    }
    holant::require(m >= 0 && d >= 0 && m + d == legs, holant::ErrorCode::invalid_argument,
                    "m + d must equal the " + std::to_string(legs) + " dangling edges");
    holant::Gadget<Rational> k(g.domain(), g.table(), g.vertices(), g.legs(), m, g.loops());
    Json mat = backend == HOLANT_EXACT ? holant::io::matrix_to_json(holant::gadget_matrix(k).matrix)
                                       : holant::io::matrix_to_json(holant::gadget_matrix(holant::convert<double>(k)).matrix);
    *result = to_c_string(Json{{"m", m}, {"d", d}, {"matrix", mat}});
  });
}

holant_status holant_pair_parse(const char* json, holant_pair** out) {
  return guarded([&] {
    require_out(json, "json");
    require_out(out, "out");
    *out = nullptr;
    auto p = holant::io::pair_from_json(holant::io::parse_text(json, "pair"));
    *out = new holant_pair{std::move(p)};
  });
}

void holant_pair_free(holant_pair* pair) { delete pair; }

holant_status holant_indist(const holant_pair* pair, const holant_indist_options* options, char** result,
                            int* distinguished) {
  return guarded([&] {
    require_out(pair, "pair");
    require_out(result, "result");
    holant_indist_options o;
    holant_indist_options_default(&o);
    if (options) o = *options;
    Json j;
    bool dist = false;
    if (o.backend == HOLANT_EXACT) {
      auto v = run_indist<Rational>(pair->file, o);
      dist = v.distinguished();
      j = verdict_json(v);
    } else {
      auto v = run_indist<double>(pair->file, o);
      dist = v.distinguished();
      j = verdict_json(v);
    }
    if (distinguished) *distinguished = dist ? 1 : 0;
    *result = to_c_string(j);
  });
}

holant_status holant_ortho_verify(const holant_pair* pair, const char* h_json, double tol, holant_backend backend,
                                  char** result, int* accepted) {
  return guarded([&] {
    require_out(pair, "pair");
    require_out(h_json, "h_json");
    require_out(result, "result");
    auto h = holant::io::matrix_from_json(holant::io::parse_text(h_json, "H"), "H");
    auto v = backend == HOLANT_EXACT ? holant::verify(pair->file.pair, h, tol)
                                     : holant::verify(holant::convert<double>(pair->file.pair), holant::convert<double>(h), tol);
    if (accepted) *accepted = v.accepted ? 1 : 0;
    *result = to_c_string(Json{{"accepted", v.accepted}, {"reason", v.reason}, {"certificate", certificate_json(v.certificate)}});
  });
}

holant_status holant_ortho_search(const holant_pair* pair, const holant_search_options* options, char** result,
                                  int* found) {
  return guarded([&] {
    require_out(pair, "pair");
    require_out(result, "result");
    holant_search_options o;
    holant_search_options_default(&o);
    if (options) o = *options;
    holant::SearchOptions so;
    so.tol = o.tol;
    so.heuristic.restarts = o.restarts;
    so.heuristic.iters = o.iters;
    so.heuristic.seed = o.seed;
    so.heuristic.tol = o.tol;
    so.heuristic.workers = o.workers;
    auto out = holant::search(holant::convert<double>(pair->file.pair), so);
    Json j{{"found", out.found()}, {"report", out.report}, {"conclusive", out.conclusive}, {"log", out.log}};
    if (out.certificate) j["certificate"] = certificate_json(*out.certificate);
    if (found) *found = out.found() ? 1 : 0;
    *result = to_c_string(j);
  });
}

holant_status holant_set_parse(const char* json, holant_set** out) {
  return guarded([&] {
    require_out(json, "json");
    require_out(out, "out");
    *out = nullptr;
    auto j = holant::io::parse_text(json, "set");
    auto sigs = holant::io::set_from_json(j);
    int q = sigs.empty() ? 1 : sigs.front().domain();
    if (j.is_object() && j.contains("q")) {
      holant::require(j["q"].is_number_integer() && j["q"].get<int>() >= 1, holant::ErrorCode::schema,
                      "field 'q': expected a positive integer");
      holant::require(sigs.empty() || j["q"].get<int>() == q, holant::ErrorCode::invariant,
                      "field 'q' disagrees with the signature domains");
      q = j["q"].get<int>();
    }
    *out = new holant_set{q, std::move(sigs)};
  });
}

void holant_set_free(holant_set* set) { delete set; }

holant_status holant_odeco_check(const holant_set* set, double tol, char** result, int* ok) {
  return guarded([&] {
    require_out(set, "set");
    require_out(result, "result");
    Json j;
    auto asym = holant::first_asymmetric_star(set->signatures, tol);
    j["star_symmetric"] = !asym.has_value();
    if (asym)
      j["asymmetric_star"] = Json{{"i", asym->i}, {"j", asym->j}, {"x", asym->witness.x}, {"swapped", asym->witness.swapped}};
    auto d = holant::odeco_decompose(holant::convert<double>(set->signatures), tol);
    j["stage"] = holant::to_string(d.stage);
    j["odeco"] = d.ok();
    if (!d.message.empty()) j["message"] = d.message;
    if (ok) *ok = d.ok() ? 1 : 0;
    *result = to_c_string(j);
  });
}

holant_status holant_odeco_decompose(const holant_set* set, double tol, uint64_t seed, char** result, int* ok) {
  return guarded([&] {
    require_out(set, "set");
    require_out(result, "result");
    auto d = holant::odeco_decompose(holant::convert<double>(set->signatures), tol, seed);
    Json j{{"ok", d.ok()}, {"stage", holant::to_string(d.stage)}};
    if (!d.message.empty()) j["message"] = d.message;
    if (d.certificate) {
      const auto& c = *d.certificate;
      j["H"] = holant::io::matrix_to_json(c.h.matrix);
      j["weights"] = c.weights;
      j["residuals"] = c.residuals;
      j["residual"] = c.residual;
      j["unary_only"] = c.unary_only;
    }
    if (ok) *ok = d.ok() ? 1 : 0;
    *result = to_c_string(j);
  });
}

holant_status holant_span(const holant_set* set, int m, int d, int max_vertices, int max_total_degree,
                          holant_backend backend, char** result) {
  return guarded([&] {
    require_out(set, "set");
    require_out(result, "result");
    holant::GridBudget b;
    b.max_vertices = max_vertices;
    b.max_total_degree = max_total_degree;
    *result = to_c_string(backend == HOLANT_EXACT ? span_json<Rational>(*set, m, d, b) : span_json<double>(*set, m, d, b));
  });
}

holant_status holant_hom(const char* json, int max_size, int max_cycle, holant_backend backend, char** result,
                         int* differ) {
  return guarded([&] {
    require_out(json, "json");
    require_out(result, "result");
    holant::require(max_cycle >= 0 && max_cycle <= 64, holant::ErrorCode::invalid_argument, "cycle length must be in 0..64");
    auto in = holant::io::parse_text(json, "hom");
    holant::require(in.is_object() && in.contains("x"), holant::ErrorCode::schema, "field 'x': missing");
    bool d = false;
    Json j = backend == HOLANT_EXACT ? hom_json<Rational>(in, max_size, max_cycle, d) : hom_json<double>(in, max_size, max_cycle, d);
    if (differ) *differ = d ? 1 : 0;
    *result = to_c_string(j);
  });
}

}  // extern "C"
