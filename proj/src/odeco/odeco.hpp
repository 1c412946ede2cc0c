#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gadget/contraction.hpp"
#include "indist/enumerate.hpp"
#include "tensor_core/ops.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant {

// (F₁*F₂)(x, y) = Σ_z F₁(x, z) F₂(y, z)
template <Scalar T>
Signature<T> star(const Signature<T>& f1, const Signature<T>& f2, double tol = kDefaultTol) {
  require(f1.domain() == f2.domain(), ErrorCode::domain_mismatch, "star product across different domains");
  require(f1.arity() >= 1 && f2.arity() >= 1, ErrorCode::arity_mismatch, "star product needs arities of at least 1");
  require(is_symmetric(f1, tol) && is_symmetric(f2, tol), ErrorCode::not_symmetric,
          "star product needs symmetric signatures");
  const int q = f1.domain();
  Matrix<T> a(ipow(q, f1.arity() - 1), static_cast<std::size_t>(q), f1.values());
  Matrix<T> b(ipow(q, f2.arity() - 1), static_cast<std::size_t>(q), f2.values());
  return Signature<T>(q, f1.arity() + f2.arity() - 2, (a * transpose(b)).data());
}

// Inputs (2,3), (4,5), ... contracted; inputs 0 and 1 kept.
template <Scalar T>
Signature<T> tilde(const Signature<T>& f) {
  require(f.arity() >= 2 && f.arity() % 2 == 0, ErrorCode::arity_mismatch,
          "tilde needs an even arity of at least 2, got " + std::to_string(f.arity()));
  Signature<T> t = f;
  while (t.arity() > 2) t = contract(t, 2, 3);
  return t;
}

template <Scalar T>
Matrix<T> tilde_matrix(const Signature<T>& f) {
  const int q = f.domain();
  return Matrix<T>(static_cast<std::size_t>(q), static_cast<std::size_t>(q), tilde(f).values());
}

// Weights a with F = Σ_x a_x e_x^{⊗n}, when F vanishes off constant tuples.
template <Scalar T>
std::optional<std::vector<T>> verify_geneq(const Signature<T>& f, double tol = kDefaultTol) {
  if (f.arity() < 1) return std::nullopt;
  const int q = f.domain(), n = f.arity();
  const double scale = std::max(1.0, max_abs(f));
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    bool constant = std::all_of(x.begin(), x.end(), [&](int v) { return v == x[0]; });
    if (!constant && !near(f[idx], T(0), tol, scale)) return std::nullopt;
    ++idx;
  } while (next_tuple(q, x));
  std::vector<T> w;
  for (int v = 0; v < q; ++v) w.push_back(f.at(std::vector<int>(static_cast<std::size_t>(n), v)));
  return w;
}

template <Scalar T>
void require_symmetric_set(const std::vector<Signature<T>>& set, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i)
    require(is_symmetric(set[i], tol), ErrorCode::not_symmetric, "signature " + std::to_string(i) + " is not symmetric");
}

struct StarAsymmetry {
  std::size_t i = 0;
  std::size_t j = 0;
  AsymmetryWitness witness;
};

// First ordered pair (i, j), i = j included, whose star product is asymmetric.
template <Scalar T>
std::optional<StarAsymmetry> first_asymmetric_star(const std::vector<Signature<T>>& set, double tol = kDefaultTol) {
  require_symmetric_set(set, tol);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (set[i].arity() < 1 || set[j].arity() < 1) continue;
      if (auto w = asymmetry_witness(star(set[i], set[j], tol), tol)) return StarAsymmetry{i, j, *w};
    }
  return std::nullopt;
}

template <Scalar T>
bool pairwise_star_symmetric(const std::vector<Signature<T>>& set, double tol = kDefaultTol) {
  return !first_asymmetric_star(set, tol).has_value();
}

// First connected gadget within budget, 1..max_legs dangling edges, whose
// signature is asymmetric.
template <Scalar T>
std::optional<Gadget<T>> asymmetric_connected_gadget(const std::vector<Signature<T>>& set, GridBudget budget,
                                                     int max_legs = 4, double tol = kDefaultTol) {
  require_symmetric_set(set, tol);
  if (set.empty()) return std::nullopt;
  budget.connected_only = true;
  const int q = set.front().domain();
  std::vector<SlotInfo> slots;
  for (const auto& f : set) slots.push_back(SlotInfo{f.arity(), true});
  std::optional<Gadget<T>> found;
  for (int legs = 1; legs <= max_legs && !found; ++legs) {
    BoundarySpec boundary{legs, false, false, true};
    enumerate_shapes(slots, budget, boundary, [&](const GridShape& shape) {
      if (shape.vertex_signature.empty()) return true;
      auto k = realize(shape, set, q, 0);
      if (!is_symmetric(gadget_signature(k), tol)) {
        found = std::move(k);
        return false;
      }
      return true;
    });
  }
  return found;
}

template <Scalar T>
bool connected_gadget_symmetric(const std::vector<Signature<T>>& set, GridBudget budget, int max_legs = 4,
                                double tol = kDefaultTol) {
  return !asymmetric_connected_gadget(set, std::move(budget), max_legs, tol).has_value();
}

// ---- decomposition ----

enum class OdecoStage { ok, asymmetric_star, non_commuting_tildes, non_commuting_slices, residual_too_large };

const char* to_string(OdecoStage s);

struct OdecoCertificate {
  OrthogonalMap h;                           // H F ≈ GenEQ(weights) for every F
  std::vector<std::vector<double>> weights;  // one vector per input signature
  std::vector<double> residuals;             // max-entry norm of HF − GenEQ, relative to ‖F‖
  double residual = 0.0;
  bool unary_only = false;
};

struct OdecoResult {
  OdecoStage stage = OdecoStage::ok;
  std::string message;
  std::optional<StarAsymmetry> asymmetry;
  std::optional<OdecoCertificate> certificate;  // the candidate also accompanies residual failures

  bool ok() const { return stage == OdecoStage::ok; }
};

OdecoResult odeco_decompose(const std::vector<Signature<double>>& set, double tol = 1e-7, std::uint64_t seed = 0);

}  // namespace holant
