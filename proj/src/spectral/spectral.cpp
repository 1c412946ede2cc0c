#include "spectral/spectral.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace holant {

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

Matrix<double> from_eigen(const Eigen::MatrixXd& m) {
  Matrix<double> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

namespace {

double off_diagonal(const std::vector<Eigen::MatrixXd>& mats) {
  double r = 0;
  for (const auto& m : mats)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (i != j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

// Cyclic sweeps; each rotation maximizes the summed squared diagonals over all
// matrices for its index pair. mats and v are updated in place.
void jacobi_sweeps(std::vector<Eigen::MatrixXd>& mats, Eigen::MatrixXd& v, int max_sweeps) {
  const Eigen::Index q = v.rows();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < q; ++p)
      for (Eigen::Index r = p + 1; r < q; ++r) {
        double g11 = 0, g12 = 0, g22 = 0;
        for (const auto& a : mats) {
          double h1 = a(p, p) - a(r, r);
          double h2 = a(p, r) + a(r, p);
          g11 += h1 * h1;
          g12 += h1 * h2;
          g22 += h2 * h2;
        }
        double psi = 0.5 * std::atan2(2 * g12, g11 - g22);
        double theta = 0.5 * psi;
        double c = std::cos(theta), s = std::sin(theta);
        if (std::abs(s) < 1e-15) continue;
        rotated = true;
        for (auto& a : mats) {
          // A <- Rᵀ A R with R = [[c, -s], [s, c]] on (p, r)
          for (Eigen::Index k = 0; k < q; ++k) {
            double ap = a(k, p), ar = a(k, r);
            a(k, p) = c * ap + s * ar;
            a(k, r) = -s * ap + c * ar;
          }
          for (Eigen::Index k = 0; k < q; ++k) {
            double ap = a(p, k), ar = a(r, k);
            a(p, k) = c * ap + s * ar;
            a(r, k) = -s * ap + c * ar;
          }
        }
        for (Eigen::Index k = 0; k < q; ++k) {
          double vp = v(k, p), vr = v(k, r);
          v(k, p) = c * vp + s * vr;
          v(k, r) = -s * vp + c * vr;
        }
      }
    if (!rotated) return;
  }
}

}  // namespace

JointDiagResult joint_diagonalize(const std::vector<Matrix<double>>& mats, double tol, std::uint64_t seed) {
  require(!mats.empty(), ErrorCode::invalid_argument, "joint diagonalization needs at least one matrix");
  const std::size_t q = mats.front().rows();
  double scale = 1.0;
  for (const auto& m : mats) {
    require(m.rows() == q && m.cols() == q, ErrorCode::dimension_mismatch, "joint diagonalization needs equal square shapes");
    require(is_symmetric_matrix(m, tol), ErrorCode::not_symmetric, "joint diagonalization input is not symmetric");
    scale = std::max(scale, max_abs(m));
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      double c = max_abs_diff(mats[i] * mats[j], mats[j] * mats[i]);
      require(c <= tol * scale * scale, ErrorCode::not_commuting,
              "matrices " + std::to_string(i) + " and " + std::to_string(j) + " do not commute (commutator " +
                  std::to_string(c) + ")");
    }

  std::vector<Eigen::MatrixXd> work;
  for (const auto& m : mats) work.push_back(to_eigen(m));
  const Eigen::Index n = static_cast<Eigen::Index>(q);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  jacobi_sweeps(work, v, 100);

  if (off_diagonal(work) > tol * scale) {
    // fallback: eigenbasis of a random combination, then refine
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (const auto& m : mats) combo += gauss(rng) * to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(combo);
    v = es.eigenvectors();
    work.clear();
    for (const auto& m : mats) work.push_back(v.transpose() * to_eigen(m) * v);
    jacobi_sweeps(work, v, 100);
  }

  std::vector<std::vector<double>> cols(q);
  for (std::size_t j = 0; j < q; ++j)
    for (const auto& a : work) cols[j].push_back(a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)));
  std::vector<std::size_t> order(q);
  std::iota(order.begin(), order.end(), 0);
  const double eps = 1e-9 * scale;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < cols[a].size(); ++k) {
      if (std::abs(cols[a][k] - cols[b][k]) <= eps) continue;
      return cols[a][k] > cols[b][k];
    }
    return false;
  });

  JointDiagResult res;
  Matrix<double> h(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    const std::size_t src = order[j];
    double sign = 1.0;
    for (std::size_t i = 0; i < q; ++i) {
      double x = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(src));
      if (std::abs(x) > 1e-10) {
        sign = x < 0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < q; ++i) h(i, j) = sign * v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(src));
  }
  res.residual = 0;
  for (const auto& m : mats) {
    Matrix<double> d = transpose(h) * m * h;
    std::vector<double> diag;
    for (std::size_t i = 0; i < q; ++i) {
      diag.push_back(d(i, i));
      for (std::size_t j = 0; j < q; ++j)
        if (i != j) res.residual = std::max(res.residual, std::abs(d(i, j)));
    }
    res.diagonals.push_back(std::move(diag));
  }
  res.h = OrthogonalMap{std::move(h), tol};
  return res;
}

SvdFactor svd_factor(const Matrix<double>& m) {
  require(m.square(), ErrorCode::dimension_mismatch, "svd_factor needs a square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdFactor out;
  out.u = from_eigen(svd.matrixU().transpose());
  out.v = from_eigen(svd.matrixV().transpose());
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) out.d.push_back(svd.singularValues()(i));
  return out;
}

EigenFactor symmetric_eigen(const Matrix<double>& m) {
  require(is_symmetric_matrix(m), ErrorCode::not_symmetric, "symmetric_eigen needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
  EigenFactor out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.values.push_back(es.eigenvalues()(i));
  out.vectors = from_eigen(es.eigenvectors());
  return out;
}

Matrix<double> polar_orthogonal(const Matrix<double>& x) {
  require(x.square(), ErrorCode::dimension_mismatch, "polar factor needs a square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(x), Eigen::ComputeFullU | Eigen::ComputeFullV);
  return from_eigen(svd.matrixU() * svd.matrixV().transpose());
}

Matrix<double> random_orthogonal(std::mt19937_64& rng, int q) {
  require(q >= 1, ErrorCode::invalid_argument, "orthogonal matrix size must be positive");
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd a(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd qm = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < q; ++j)
    if (r(j, j) < 0) qm.col(j) *= -1.0;
  return from_eigen(qm);
}

}  // namespace holant
