#include "odeco/odeco.hpp"

#include <cmath>
#include <random>

#include "gadget/standard.hpp"
#include "spectral/spectral.hpp"

namespace holant {

const char* to_string(OdecoStage s) {
  switch (s) {
    case OdecoStage::ok: return "ok";
    case OdecoStage::asymmetric_star: return "asymmetric_star";
    case OdecoStage::non_commuting_tildes: return "non_commuting_tildes";
    case OdecoStage::non_commuting_slices: return "non_commuting_slices";
    case OdecoStage::residual_too_large: return "residual_too_large";
  }
  return "unknown";
}

namespace {

Signature<double> normalized(const Signature<double>& f) {
  const double m = max_abs(f);
  return m > 0 ? scale(1.0 / m, f) : f;
}

// Contracts inputs 2..n-1 of F with u, leaving a symmetric matrix.
Matrix<double> slice(const Signature<double>& f, const std::vector<double>& u) {
  const int q = f.domain();
  std::vector<double> cur = f.values();
  for (int k = f.arity(); k > 2; --k) {
    std::vector<double> next(cur.size() / static_cast<std::size_t>(q), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (int z = 0; z < q; ++z) next[i] += cur[i * static_cast<std::size_t>(q) + static_cast<std::size_t>(z)] * u[static_cast<std::size_t>(z)];
    cur = std::move(next);
  }
  return Matrix<double>(static_cast<std::size_t>(q), static_cast<std::size_t>(q), std::move(cur));
}

// Householder reflection sending u/‖u‖ to e₀.
Matrix<double> householder_to_e0(const std::vector<double>& u) {
  const std::size_t q = u.size();
  double norm = 0;
  for (double x : u) norm += x * x;
  norm = std::sqrt(norm);
  Matrix<double> h = Matrix<double>::identity(q);
  if (norm == 0) return h;
  std::vector<double> w(q);
  for (std::size_t i = 0; i < q; ++i) w[i] = u[i] / norm - (i == 0 ? 1.0 : 0.0);
  double ww = 0;
  for (double x : w) ww += x * x;
  if (ww < 1e-30) return h;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) h(i, j) -= 2 * w[i] * w[j] / ww;
  return h;
}

OdecoCertificate certify(const std::vector<Signature<double>>& set, Matrix<double> h) {
  OdecoCertificate cert;
  for (const auto& f : set) {
    const int q = f.domain();
    auto hf = apply_transform(h, f);
    std::vector<double> w;
    if (f.arity() == 0) {
      w.assign(static_cast<std::size_t>(q), 0.0);
    } else {
      for (int x = 0; x < q; ++x) w.push_back(hf.at(std::vector<int>(static_cast<std::size_t>(f.arity()), x)));
    }
    double r = 0;
    if (f.arity() > 0) {
      const double norm = max_abs(f);
      auto g = standard::gen_equality<double>(f.arity(), w);
      r = norm > 0 ? max_abs_diff(hf, g) / norm : 0.0;
    }
    cert.weights.push_back(std::move(w));
    cert.residuals.push_back(r);
    cert.residual = std::max(cert.residual, r);
  }
  cert.h = OrthogonalMap{std::move(h), 1e-9};
  return cert;
}

}  // namespace

OdecoResult odeco_decompose(const std::vector<Signature<double>>& set, double tol, std::uint64_t seed) {
  OdecoResult out;
  if (set.empty()) {
    out.certificate = certify(set, Matrix<double>::identity(1));
    return out;
  }
  const int q = set.front().domain();
  for (const auto& f : set) require(f.domain() == q, ErrorCode::domain_mismatch, "odeco set mixes domains");
  require_symmetric_set(set, tol);

  std::vector<Signature<double>> live, unaries;
  std::vector<std::size_t> live_index;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& f = set[i];
    if (is_zero_signature(f, 0.0)) continue;
    auto g = normalized(f);
    if (f.arity() == 1) {
      unaries.push_back(g);
    } else if (f.arity() >= 2) {
      live.push_back(g);
      live_index.push_back(i);
    }
  }

  if (auto a = first_asymmetric_star(live, tol)) {
    a->i = live_index[a->i];
    a->j = live_index[a->j];
    out.stage = OdecoStage::asymmetric_star;
    out.asymmetry = a;
    out.message = "star product of signatures " + std::to_string(a->i) + " and " + std::to_string(a->j) +
                  " is not symmetric";
    return out;
  }

  if (live.empty()) {
    // only unaries: align the first with e₀
    Matrix<double> h = unaries.empty() ? Matrix<double>::identity(static_cast<std::size_t>(q))
                                       : householder_to_e0(unaries.front().values());
    out.certificate = certify(set, std::move(h));
    out.certificate->unary_only = true;
    return out;
  }

  std::vector<Matrix<double>> tildes;
  for (const auto& f : live) {
    auto even = f.arity() % 2 == 1 ? normalized(star(f, f, tol)) : f;
    tildes.push_back(tilde_matrix(even));
  }
  for (std::size_t i = 0; i < tildes.size(); ++i)
    for (std::size_t j = i + 1; j < tildes.size(); ++j)
      if (max_abs_diff(tildes[i] * tildes[j], tildes[j] * tildes[i]) > tol) {
        out.stage = OdecoStage::non_commuting_tildes;
        out.message = "tilde matrices of signatures " + std::to_string(live_index[i]) + " and " +
                      std::to_string(live_index[j]) + " do not commute";
        return out;
      }

  // random slices split eigenspaces the tildes leave degenerate
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Matrix<double>> mats = tildes;
  for (const auto& f : live) {
    if (f.arity() < 3) continue;
    for (int r = 0; r < 2; ++r) {
      std::vector<double> u(static_cast<std::size_t>(q));
      for (auto& x : u) x = gauss(rng);
      mats.push_back(slice(f, u));
    }
  }
  for (auto& m : mats) {
    // symmetrize away rounding before the exact symmetry precheck
    m = 0.5 * (m + transpose(m));
  }

  JointDiagResult jd;
  try {
    jd = joint_diagonalize(mats, tol, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_commuting) throw;
    out.stage = OdecoStage::non_commuting_slices;
    out.message = e.what();
    return out;
  }
  out.certificate = certify(set, transpose(jd.h.matrix));
  if (out.certificate->residual > tol) {
    out.stage = OdecoStage::residual_too_large;
    out.message = "residual " + std::to_string(out.certificate->residual) + " exceeds tolerance";
  }
  return out;
}

}  // namespace holant
