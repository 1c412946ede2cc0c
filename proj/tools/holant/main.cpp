#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "holant/holant.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check(holant_status s) {
  if (s != HOLANT_OK) throw Failure{std::string(holant_status_name(s)) + ": " + holant_last_error()};
}

// Takes ownership of a library-allocated string.
Json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> owned(raw, holant_string_free);
  return Json::parse(owned.get());
}

template <class H>
using Handle = std::unique_ptr<H, void (*)(H*)>;

Handle<holant_pair> load_pair(const std::string& text) {
  holant_pair* p = nullptr;
  check(holant_pair_parse(text.c_str(), &p));
  return {p, holant_pair_free};
}

Handle<holant_set> load_set(const std::string& text) {
  holant_set* s = nullptr;
  check(holant_set_parse(text.c_str(), &s));
  return {s, holant_set_free};
}

Handle<holant_grid> load_grid(const std::string& text) {
  holant_grid* g = nullptr;
  check(holant_grid_parse(text.c_str(), &g));
  return {g, holant_grid_free};
}

struct Run {
  std::string command;
  std::vector<std::string> inputs;
  Json result;
  std::string summary;
  int exit_code = kExitOk;
  // commands that only run in floating point
  bool float_only = false;
};

struct Globals {
  bool exact = false;
  bool floating = false;
  bool timings = false;
  std::uint64_t seed = 0;
  int workers = 1;

  holant_backend backend() const { return floating ? HOLANT_FLOAT : HOLANT_EXACT; }
};

int env_workers(int fallback) {
  const char* v = std::getenv("HOLANT_WORKERS");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) throw Failure{"HOLANT_WORKERS must be an integer in 1..1024"};
  return static_cast<int>(n);
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Digest over every input in order, each length-prefixed.
std::string inputs_digest(const std::vector<std::string>& inputs) {
  std::string joined;
  for (const auto& s : inputs) joined += std::to_string(s.size()) + ":" + s;
  return hex64(holant_digest(joined.data(), joined.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holant signature-grid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* exact = app.add_flag("--exact", g.exact, "exact rational arithmetic (default)");
  auto* floating = app.add_flag("--float", g.floating, "double-precision arithmetic");
  exact->excludes(floating);
  app.add_option("--seed", g.seed, "seed for stochastic commands")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads; HOLANT_WORKERS overrides")->check(CLI::Range(1, 1024));
  app.add_flag("--timings", g.timings, "include wall-clock timings in the report");

  Run run;
  std::function<void()> action;

  // eval
  std::string grid_path;
  auto* eval = app.add_subcommand("eval", "Holant value of a closed grid");
  eval->add_option("grid", grid_path, "grid JSON")->required();
  eval->callback([&] {
    action = [&] {
      run.command = "eval";
      run.inputs = {read_file(grid_path)};
      auto grid = load_grid(run.inputs[0]);
      char* out = nullptr;
      check(holant_grid_eval(grid.get(), g.backend(), &out));
      run.result = take_json(out);
      run.summary = "Holant value " + run.result["value"].dump();
    };
  });

  // matrix
  int mat_m = -1, mat_d = -1;
  auto* matrix = app.add_subcommand("matrix", "signature matrix of a gadget");
  matrix->add_option("gadget", grid_path, "gadget JSON")->required();
  auto* opt_m = matrix->add_option("--m", mat_m, "left dangling edges");
  auto* opt_d = matrix->add_option("--d", mat_d, "right dangling edges");
  opt_m->needs(opt_d);
  opt_d->needs(opt_m);
  matrix->callback([&] {
    action = [&] {
      run.command = "matrix";
      run.inputs = {read_file(grid_path)};
      auto grid = load_grid(run.inputs[0]);
      char* out = nullptr;
      check(holant_grid_matrix(grid.get(), mat_m, mat_d, g.backend(), &out));
      run.result = take_json(out);
      run.summary = "matrix " + std::to_string(run.result["matrix"].size()) + " rows (m = " +
                    run.result["m"].dump() + ", d = " + run.result["d"].dump() + ")";
    };
  });

  // indist
  holant_indist_options io;
  holant_indist_options_default(&io);
  std::string pair_path, variant = "general", witness_out;
  bool bipartite = false;
  auto* indist = app.add_subcommand("indist", "search for a distinguishing grid");
  indist->add_option("pair", pair_path, "pair JSON")->required();
  indist->add_flag("--bipartite", bipartite, "restrict to bipartite grids using the pair's side list");
  indist->add_option("--max-v", io.max_vertices, "vertex budget")->capture_default_str();
  indist->add_option("--max-degree", io.max_total_degree, "total degree budget")->capture_default_str();
  indist->add_option("--variant", variant, "grid family")
      ->check(CLI::IsMember({"general", "csp", "csp2", "cycles", "paths", "trace"}))
      ->capture_default_str();
  indist->add_option("--witnesses", io.max_witnesses, "stop after this many witnesses")->capture_default_str();
  indist->add_option("--tol", io.tol, "relative tolerance (float backend)")->capture_default_str();
  indist->add_option("--witness-out", witness_out, "write the first witness grid to this file");
  indist->callback([&] {
    action = [&] {
      run.command = "indist";
      run.inputs = {read_file(pair_path)};
      auto pair = load_pair(run.inputs[0]);
      io.bipartite = bipartite ? 1 : 0;
      io.backend = g.backend();
      io.workers = g.workers;
      if (variant == "csp") io.variant = HOLANT_INDIST_CSP;
      else if (variant == "csp2") io.variant = HOLANT_INDIST_CSP_EVEN;
      else if (variant == "cycles") io.variant = HOLANT_INDIST_CYCLES;
      else if (variant == "paths") io.variant = HOLANT_INDIST_PATHS;
      else if (variant == "trace") io.variant = HOLANT_INDIST_TRACE;
      else io.variant = HOLANT_INDIST_GENERAL;
      char* out = nullptr;
      int distinguished = 0;
      check(holant_indist(pair.get(), &io, &out, &distinguished));
      run.result = take_json(out);
      const auto& ws = run.result["witnesses"];
      if (distinguished) {
        run.exit_code = kExitNegative;
        const auto& w = ws.front();
        const auto label = w["label"].get<std::string>();
        run.summary = "distinguished" + (label.empty() ? std::string() : " by " + label) + ": " +
                      w["left_value"].dump() + " vs " + w["right_value"].dump();
        if (!witness_out.empty()) {
          std::ofstream f(witness_out);
          if (!f) throw Failure{"cannot write '" + witness_out + "'"};
          f << w["grid"].dump(2) << "\n";
        }
      } else {
        run.summary = "no counterexample among " + run.result["grids_checked"].dump() + " grids";
      }
    };
  });

  // hom
  std::string hom_path;
  int hom_size = 4, hom_cycles = 6;
  auto* hom = app.add_subcommand("hom", "homomorphism profiles of weighted graphs");
  hom->add_option("input", hom_path, "{\"x\": rows, \"y\"?: rows}")->required();
  hom->add_option("--max-size", hom_size, "largest pattern graph (edges)")->capture_default_str();
  hom->add_option("--cycles", hom_cycles, "longest closed walk")->capture_default_str();
  hom->callback([&] {
    action = [&] {
      run.command = "hom";
      run.inputs = {read_file(hom_path)};
      char* out = nullptr;
      int differ = 0;
      check(holant_hom(run.inputs[0].c_str(), hom_size, hom_cycles, g.backend(), &out, &differ));
      run.result = take_json(out);
      if (differ) run.exit_code = kExitNegative;
      run.summary = run.result.contains("profile_differs") ? (differ ? "profiles differ" : "profiles agree")
                                                           : "profile of x computed";
    };
  });

  // odeco
  std::string set_path;
  double odeco_tol = 1e-8;
  auto* odeco = app.add_subcommand("odeco", "orthogonally decomposable sets");
  odeco->require_subcommand(1);
  auto* odeco_check = odeco->add_subcommand("check", "star-symmetry and decomposability test");
  odeco_check->add_option("set", set_path, "signature set JSON")->required();
  odeco_check->add_option("--tol", odeco_tol, "tolerance")->capture_default_str();
  odeco_check->callback([&] {
    action = [&] {
      run.command = "odeco check";
      run.float_only = true;
      run.inputs = {read_file(set_path)};
      auto set = load_set(run.inputs[0]);
      char* out = nullptr;
      int ok = 0;
      check(holant_odeco_check(set.get(), odeco_tol, &out, &ok));
      run.result = take_json(out);
      if (!ok) run.exit_code = kExitNegative;
      run.summary = ok ? "odeco" : "not odeco (" + run.result["stage"].get<std::string>() + ")";
    };
  });
  auto* odeco_dec = odeco->add_subcommand("decompose", "recover H and weights");
  odeco_dec->add_option("set", set_path, "signature set JSON")->required();
  odeco_dec->add_option("--tol", odeco_tol, "tolerance")->capture_default_str();
  odeco_dec->callback([&] {
    action = [&] {
      run.command = "odeco decompose";
      run.float_only = true;
      run.inputs = {read_file(set_path)};
      auto set = load_set(run.inputs[0]);
      char* out = nullptr;
      int ok = 0;
      check(holant_odeco_decompose(set.get(), odeco_tol, g.seed, &out, &ok));
      run.result = take_json(out);
      if (!ok) run.exit_code = kExitNegative;
      run.summary = ok ? "decomposed, residual " + run.result["residual"].dump()
                       : "not decomposable (" + run.result["stage"].get<std::string>() + ")";
    };
  });

  // ortho
  std::string h_path;
  double ortho_tol = 1e-8;
  holant_search_options so;
  holant_search_options_default(&so);
  auto* ortho = app.add_subcommand("ortho", "orthogonal equivalence of signature sets");
  ortho->require_subcommand(1);
  auto* verify = ortho->add_subcommand("verify", "check a candidate H");
  verify->add_option("pair", pair_path, "pair JSON")->required();
  verify->add_option("H", h_path, "matrix JSON")->required();
  verify->add_option("--tol", ortho_tol, "relative residual tolerance")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      run.command = "ortho verify";
      run.inputs = {read_file(pair_path), read_file(h_path)};
      auto pair = load_pair(run.inputs[0]);
      char* out = nullptr;
      int accepted = 0;
      check(holant_ortho_verify(pair.get(), run.inputs[1].c_str(), ortho_tol, g.backend(), &out, &accepted));
      run.result = take_json(out);
      if (!accepted) run.exit_code = kExitNegative;
      run.summary = accepted ? "accepted" : "rejected: " + run.result["reason"].get<std::string>();
    };
  });
  auto* search = ortho->add_subcommand("search", "look for H with HF = G");
  search->add_option("pair", pair_path, "pair JSON")->required();
  search->add_option("--restarts", so.restarts, "heuristic restarts")->capture_default_str();
  search->add_option("--iters", so.iters, "iterations per restart")->capture_default_str();
  search->add_option("--tol", so.tol, "acceptance tolerance")->capture_default_str();
  search->callback([&] {
    action = [&] {
      run.command = "ortho search";
      run.float_only = true;
      run.inputs = {read_file(pair_path)};
      auto pair = load_pair(run.inputs[0]);
      so.seed = g.seed;
      so.workers = g.workers;
      char* out = nullptr;
      int found = 0;
      check(holant_ortho_search(pair.get(), &so, &out, &found));
      run.result = take_json(out);
      if (!found) run.exit_code = kExitNegative;
      const auto report = run.result["report"].get<std::string>();
      run.summary = (found ? "found via " + run.result["certificate"]["method"].get<std::string>() : "not found") +
                    (report.empty() ? std::string() : ": " + report);
    };
  });

  // span
  int span_m = 1, span_d = 1, span_v = 2, span_deg = 8;
  auto* span = app.add_subcommand("span", "span of gadget matrices");
  span->add_option("set", set_path, "signature set JSON")->required();
  span->add_option("--m", span_m, "left dangling edges")->capture_default_str();
  span->add_option("--d", span_d, "right dangling edges")->capture_default_str();
  span->add_option("--max-v", span_v, "vertex budget")->capture_default_str();
  span->add_option("--max-degree", span_deg, "total degree budget")->capture_default_str();
  span->callback([&] {
    action = [&] {
      run.command = "span";
      run.inputs = {read_file(set_path)};
      auto set = load_set(run.inputs[0]);
      char* out = nullptr;
      check(holant_span(set.get(), span_m, span_d, span_v, span_deg, g.backend(), &out));
      run.result = take_json(out);
      run.summary = "span dimension " + run.result["dimension"].dump() + " from " + run.result["gadgets"].dump() +
                    " gadgets";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    g.workers = env_workers(g.workers);
    const auto start = std::chrono::steady_clock::now();
    action();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json report{{"command", run.command},
                {"inputs_digest", inputs_digest(run.inputs)},
                {"backend", g.backend() == HOLANT_EXACT && !run.float_only ? "exact" : "float"},
                {"seed", g.seed},
                {"result", run.result}};
    if (g.timings) report["timings"] = Json{{"total_seconds", seconds}};
    std::cout << report.dump(2) << "\n";
    std::cerr << run.command << ": " << run.summary << "\n";
    return run.exit_code;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
