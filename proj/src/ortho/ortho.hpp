#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "common/linalg.hpp"
#include "gadget/contraction.hpp"
#include "indist/enumerate.hpp"
#include "tensor_core/ops.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant {

enum class OrthoMethod { given, odeco, binary, induction, heuristic, base_q1 };

const char* to_string(OrthoMethod m);

struct OrthoCertificate {
  OrthogonalMap h;
  std::vector<double> residuals;  // ‖HF − G‖ / ‖F‖ per corresponding pair, Frobenius
  double residual = 0.0;
  double orthogonality = 0.0;     // max |HᵀH − I|
  OrthoMethod method = OrthoMethod::given;
};

struct Verification {
  bool accepted = false;
  OrthoCertificate certificate;  // measured values, filled in either way
  std::string reason;            // empty when accepted
};

// Accepts iff H is orthogonal within tol and every residual is at most tol.
// A zero F is measured by ‖G‖ alone.
template <Scalar T>
Verification verify(const SimilarPair<T>& pair, const Matrix<T>& h, double tol = 1e-8,
                    OrthoMethod method = OrthoMethod::given) {
  const int q = pair.domain();
  Verification v;
  v.certificate.method = method;
  if (h.rows() != static_cast<std::size_t>(q) || !h.square()) {
    v.reason = "H is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + ", expected " +
               std::to_string(q) + "x" + std::to_string(q);
    return v;
  }
  v.certificate.orthogonality = orthogonality_error(h);
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const auto& f = pair.left()[i];
    const double d = distance(apply_transform(h, f), pair.partner(i));
    const double nf = norm(f);
    const double r = nf > 0 ? d / nf : d;
    v.certificate.residuals.push_back(r);
    v.certificate.residual = std::max(v.certificate.residual, r);
  }
  v.certificate.h = OrthogonalMap{convert<double>(h), tol};
  if (v.certificate.orthogonality > tol) {
    v.reason = "H is not orthogonal (error " + std::to_string(v.certificate.orthogonality) + ")";
  } else if (v.certificate.residual > tol) {
    v.reason = "residual " + std::to_string(v.certificate.residual) + " exceeds tolerance";
  } else {
    v.accepted = true;
  }
  return v;
}

// Either a verified certificate or the reason none was found.
struct SearchOutcome {
  std::optional<OrthoCertificate> certificate;
  std::string report;
  std::vector<std::string> log;  // stages tried, in order
  bool conclusive = false;       // the report names an invariant that differs

  bool found() const { return certificate.has_value(); }
};

// Over a one-element domain H = (±1): even arities must agree exactly, odd
// arities up to one common sign.
template <Scalar T>
SearchOutcome solve_q1(const SimilarPair<T>& pair, double tol = 1e-8) {
  require(pair.domain() == 1, ErrorCode::invalid_argument,
          "solve_q1 needs domain size 1, got " + std::to_string(pair.domain()));
  SearchOutcome out;
  auto str = [](const T& v) {
    if constexpr (is_exact_v<T>) return format_rational(v);
    else return std::to_string(v);
  };
  double scale = 1.0;
  for (std::size_t i = 0; i < pair.size(); ++i)
    scale = std::max({scale, magnitude(pair.left()[i][0]), magnitude(pair.partner(i)[0])});
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const T& f = pair.left()[i][0];
    const T& g = pair.partner(i)[0];
    const int n = pair.left()[i].arity();
    if (n % 2 == 0 && !near(f, g, tol, scale)) {
      out.conclusive = true;
      out.report = "even-arity mismatch: signature " + std::to_string(i) + " (arity " + std::to_string(n) +
                   ") has value " + str(f) + " against " + str(g);
      return out;
    }
    if (n % 2 == 1 && !near(T(f * f), T(g * g), tol, scale * scale)) {
      out.conclusive = true;
      out.report = "norm mismatch: signature " + std::to_string(i) + " (arity " + std::to_string(n) +
                   ") has squared value " + str(T(f * f)) + " against " + str(T(g * g));
      return out;
    }
  }
  // the first odd signature with a nonzero value fixes the sign
  std::optional<std::size_t> anchor;
  int sign = 1;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    if (pair.left()[i].arity() % 2 == 0 || is_zero(pair.left()[i][0], tol * scale)) continue;
    const T& f = pair.left()[i][0];
    const T& g = pair.partner(i)[0];
    const int s = near(f, g, tol, scale) ? 1 : -1;
    if (!anchor) {
      anchor = i;
      sign = s;
    } else if (s != sign) {
      const T& fa = pair.left()[*anchor][0];
      const T& ga = pair.partner(*anchor)[0];
      out.conclusive = true;
      out.report = "mixed parity: signatures " + std::to_string(*anchor) + " and " + std::to_string(i) +
                   " pair to " + str(T(fa * f)) + " against " + str(T(ga * g));
      return out;
    }
  }
  Matrix<T> h(1, 1);
  h(0, 0) = T(sign);
  auto v = verify(pair, h, tol, OrthoMethod::base_q1);
  if (!v.accepted) {
    out.report = v.reason;
    return out;
  }
  out.certificate = std::move(v.certificate);
  return out;
}

struct HeuristicOptions {
  int restarts = 10;
  int iters = 200;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int workers = 1;
};

// Gauss-Newton descent on Σ ‖HF − G‖² / max(1, ‖F‖²) over the orthogonal
// group, retracting by the polar factor and halving the step on non-decrease. Start 0 is I,
// start r > 0 is Haar from seed + r; the lowest verified start wins.
std::optional<OrthoCertificate> heuristic_search(const SimilarPair<double>& pair, const HeuristicOptions& options = {});

struct BinaryOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int trace_length = 4;
  bool fallback = true;
  HeuristicOptions heuristic;
};

// Simultaneous orthogonal similarity of binary families: an invertible
// element of {X : XA = BX, XAᵀ = BᵀX} has an orthogonal polar factor that
// still intertwines.
SearchOutcome solve_binary(const SimilarPair<double>& pair, const BinaryOptions& options = {});

using LeafSolver = std::function<SearchOutcome(const SimilarPair<double>&)>;

// Level sets Z of the diagonal D, in order of first occurrence, are solved one
// at a time; inputs outside the current set are pinned to already solved
// coordinates, on which the right side has been rotated back to the identity.
SearchOutcome domain_induction(const SimilarPair<double>& pair, const Matrix<double>& d, const LeafSolver& leaf,
                               double tol = 1e-8);

struct SearchOptions {
  HeuristicOptions heuristic;
  double tol = 1e-8;
  GridBudget span_budget;
  int max_depth = 3;

  SearchOptions() {
    span_budget.max_vertices = 2;
    span_budget.max_total_degree = 8;
  }
};

// Stages: q = 1 parity rule, odeco alignment, binary solver, a shared diagonal
// from the (1,1) gadget span followed by domain induction, heuristic descent.
SearchOutcome search(const SimilarPair<double>& pair, const SearchOptions& options = {});

// Orthogonal U_X ⊕ V_Y, in the coordinates of [q], making the X,Y block of the
// binary F diagonal with descending nonnegative entries.
Matrix<double> svd_normalize(const Signature<double>& f, const BlockPartition& p);

// ---- gadget spans ----

template <Scalar T>
struct SpanResult {
  std::vector<Matrix<T>> basis;  // orthonormal (float) or orthogonal (exact)
  std::size_t gadgets = 0;
};

// M(K) of every (m, d)-gadget within budget; each vertex touches a dangling
// edge through the gadget. Closed components only rescale other members.
template <Scalar T>
std::vector<Matrix<T>> gadget_matrices(const std::vector<Signature<T>>& set, int q, int m, int d, GridBudget budget,
                                       const std::vector<Signature<T>>* substitute = nullptr,
                                       std::vector<Matrix<T>>* substituted = nullptr) {
  require(m >= 0 && d >= 0, ErrorCode::invalid_argument, "gadget shape must be nonnegative");
  budget.validate();
  std::vector<SlotInfo> slots;
  for (const auto& f : set) slots.push_back(SlotInfo{f.arity(), false});
  std::vector<Matrix<T>> out;
  enumerate_shapes(slots, budget, BoundarySpec{m + d, true, true, true}, [&](const GridShape& shape) {
    auto k = realize(shape, set, q, m);
    out.push_back(gadget_matrix(k).matrix);
    if (substitute) substituted->push_back(gadget_matrix(realize(shape, *substitute, q, m)).matrix);
    return true;
  });
  return out;
}

template <Scalar T>
SpanResult<T> gadget_span(const std::vector<Signature<T>>& set, int q, int m, int d, GridBudget budget,
                          double tol = 1e-10) {
  auto mats = gadget_matrices(set, q, m, d, std::move(budget));
  SpanResult<T> out;
  out.gadgets = mats.size();
  if (mats.empty()) return out;
  const std::size_t rows = mats.front().rows(), cols = mats.front().cols();
  const std::size_t len = rows * cols;
  if constexpr (is_exact_v<T>) {
    std::vector<std::vector<T>> ortho;
    for (const auto& mk : mats) {
      std::vector<T> v = mk.data();
      for (const auto& u : ortho) {
        T uv(0), uu(0);
        for (std::size_t i = 0; i < len; ++i) {
          uv += u[i] * v[i];
          uu += u[i] * u[i];
        }
        const T c = uv / uu;
        for (std::size_t i = 0; i < len; ++i) v[i] -= c * u[i];
      }
      if (std::all_of(v.begin(), v.end(), [](const T& x) { return sgn(x) == 0; })) continue;
      ortho.push_back(std::move(v));
    }
    for (auto& v : ortho) out.basis.emplace_back(rows, cols, std::move(v));
  } else {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(mats.size()), static_cast<Eigen::Index>(len));
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (std::size_t i = 0; i < len; ++i) a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = mats[k].data()[i];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) <= cutoff) break;
      std::vector<double> v(len);
      for (std::size_t i = 0; i < len; ++i) v[i] = svd.matrixV()(static_cast<Eigen::Index>(i), k);
      out.basis.emplace_back(rows, cols, std::move(v));
    }
  }
  return out;
}

}  // namespace holant
