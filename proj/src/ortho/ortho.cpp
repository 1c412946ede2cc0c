#include "ortho/ortho.hpp"

#include <future>
#include <random>

#include "indist/testers.hpp"
#include "odeco/odeco.hpp"
#include "spectral/spectral.hpp"

namespace holant {

const char* to_string(OrthoMethod m) {
  switch (m) {
    case OrthoMethod::given: return "given";
    case OrthoMethod::odeco: return "odeco";
    case OrthoMethod::binary: return "binary";
    case OrthoMethod::induction: return "induction";
    case OrthoMethod::heuristic: return "heuristic";
    case OrthoMethod::base_q1: return "base_q1";
  }
  return "unknown";
}

namespace {

// Columns span the numerical kernel of a.
Eigen::MatrixXd kernel(const Eigen::MatrixXd& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  return svd.matrixV().rightCols(a.cols() - r);
}

Matrix<double> binary_matrix(const Signature<double>& f) {
  const auto q = static_cast<std::size_t>(f.domain());
  return Matrix<double>(q, q, f.values());
}

struct Objective {
  std::vector<Signature<double>> f;
  std::vector<Signature<double>> g;
  std::vector<double> weight;

  explicit Objective(const SimilarPair<double>& pair) : f(pair.left()), g(pair.aligned_right()) {
    for (const auto& s : f) weight.push_back(1.0 / std::max(1.0, norm(s) * norm(s)));
  }

  double value(const Matrix<double>& h) const {
    double total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double d = distance(apply_transform(h, f[i]), g[i]);
      total += weight[i] * d * d;
    }
    return total;
  }

  // Weighted residuals √w (HF − G), concatenated.
  Eigen::VectorXd residual(const Matrix<double>& h) const {
    std::vector<double> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto hf = apply_transform(h, f[i]);
      const double sw = std::sqrt(weight[i]);
      for (std::size_t t = 0; t < hf.size(); ++t) out.push_back(sw * (hf[t] - g[i][t]));
    }
    return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
  }

  // Column (a, b), a < b: derivative of the residuals along H(I + tE_ab),
  // E_ab = e_a e_bᵀ − e_b e_aᵀ.
  Eigen::MatrixXd jacobian(const Matrix<double>& h) const {
    const int q = static_cast<int>(h.rows());
    const auto uq = static_cast<std::size_t>(q);
    std::size_t rows = 0;
    for (const auto& s : f) rows += s.size();
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(uq * (uq - 1) / 2));
    Eigen::Index col = 0;
    for (std::size_t a = 0; a < uq; ++a)
      for (std::size_t b = a + 1; b < uq; ++b, ++col) {
        Matrix<double> he(uq, uq);
        for (std::size_t r = 0; r < uq; ++r) {
          he(r, b) = h(r, a);
          he(r, a) = -h(r, b);
        }
        Eigen::Index row = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          const int n = f[i].arity();
          std::vector<double> acc(f[i].size(), 0.0);
          for (int k = 0; k < n; ++k) {
            std::vector<double> p = f[i].values();
            for (int axis = 0; axis < n; ++axis) p = detail::mode_product(p, q, n, axis, axis == k ? he : h);
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
          }
          const double sw = std::sqrt(weight[i]);
          for (double v : acc) jac(row++, col) = sw * v;
        }
      }
    return jac;
  }
};

// H ← polar(H(I + ηS)) with S the Gauss-Newton step in skew coordinates; η
// halves until the objective decreases.
Matrix<double> descend(const Objective& obj, Matrix<double> h, int iters, double stop) {
  const auto uq = h.rows();
  if (uq < 2) return h;
  double fval = obj.value(h);
  for (int it = 0; it < iters && fval > stop; ++it) {
    const Eigen::VectorXd r = obj.residual(h);
    const Eigen::MatrixXd jac = obj.jacobian(h);
    Eigen::MatrixXd normal = jac.transpose() * jac;
    const double damping = 1e-10 * std::max(1.0, normal.diagonal().maxCoeff());
    normal.diagonal().array() += damping;
    const Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * r);
    Matrix<double> skew(uq, uq);
    Eigen::Index c = 0;
    for (std::size_t a = 0; a < uq; ++a)
      for (std::size_t b = a + 1; b < uq; ++b, ++c) {
        skew(a, b) = step(c);
        skew(b, a) = -step(c);
      }
    bool improved = false;
    for (double eta = 1.0; eta > 1e-10; eta *= 0.5) {
      auto next = polar_orthogonal(h * (Matrix<double>::identity(uq) + eta * skew));
      const double fnext = obj.value(next);
      if (fnext < fval) {
        h = std::move(next);
        fval = fnext;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return h;
}

std::optional<OrthoCertificate> heuristic_start(const SimilarPair<double>& pair, const Objective& obj,
                                                const HeuristicOptions& opt, int r) {
  const auto q = pair.domain();
  Matrix<double> start = Matrix<double>::identity(static_cast<std::size_t>(q));
  if (r > 0) {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(r));
    start = random_orthogonal(rng, q);
  }
  const double stop = 1e-4 * opt.tol * opt.tol;
  auto h = descend(obj, std::move(start), opt.iters, stop);
  auto v = verify(pair, h, opt.tol, OrthoMethod::heuristic);
  if (!v.accepted) return std::nullopt;
  return std::move(v.certificate);
}

SearchOutcome identity_outcome(const SimilarPair<double>& pair, double tol, OrthoMethod method) {
  SearchOutcome out;
  auto v = verify(pair, Matrix<double>::identity(static_cast<std::size_t>(pair.domain())), tol, method);
  if (v.accepted) out.certificate = std::move(v.certificate);
  else out.report = v.reason;
  return out;
}

}  // namespace

std::optional<OrthoCertificate> heuristic_search(const SimilarPair<double>& pair, const HeuristicOptions& options) {
  require(options.restarts >= 1 && options.iters >= 0 && options.workers >= 1, ErrorCode::invalid_argument,
          "heuristic search needs restarts >= 1, iters >= 0, workers >= 1");
  const Objective obj(pair);
  for (int first = 0; first < options.restarts; first += options.workers) {
    const int last = std::min(options.restarts, first + options.workers);
    std::vector<std::optional<OrthoCertificate>> found(static_cast<std::size_t>(last - first));
    if (options.workers == 1) {
      found[0] = heuristic_start(pair, obj, options, first);
    } else {
      std::vector<std::future<std::optional<OrthoCertificate>>> jobs;
      for (int r = first; r < last; ++r)
        jobs.push_back(std::async(std::launch::async, [&, r] { return heuristic_start(pair, obj, options, r); }));
      for (std::size_t k = 0; k < jobs.size(); ++k) found[k] = jobs[k].get();
    }
    for (auto& c : found)
      if (c) return c;
  }
  return std::nullopt;
}

SearchOutcome solve_binary(const SimilarPair<double>& pair, const BinaryOptions& options) {
  for (std::size_t i = 0; i < pair.size(); ++i)
    require(pair.left()[i].arity() == 2, ErrorCode::arity_mismatch,
            "solve_binary needs binary signatures; signature " + std::to_string(i) + " has arity " +
                std::to_string(pair.left()[i].arity()));
  SearchOutcome out;
  const int q = pair.domain();
  const auto uq = static_cast<std::size_t>(q);
  if (pair.size() == 0) return identity_outcome(pair, options.tol, OrthoMethod::binary);

  if (options.trace_length > 0) {
    out.log.push_back("trace words");
    IndistOptions io;
    io.tol = options.tol;
    auto verdict = trace_indist(pair, options.trace_length, io);
    if (verdict.distinguished()) {
      const auto& w = verdict.witness();
      out.conclusive = true;
      out.report = "trace word differs: " + w.label + " is " + std::to_string(w.left_value) + " against " +
                   std::to_string(w.right_value);
      return out;
    }
  }

  out.log.push_back("intertwiners");
  // X A = B X and X Aᵀ = Bᵀ X, unknowns X(r, c) at r·q + c
  const auto k = pair.size();
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(4 * k * uq * uq), static_cast<Eigen::Index>(uq * uq));
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = binary_matrix(pair.left()[i]);
    const auto b = binary_matrix(pair.partner(i));
    for (const auto& [aa, bb] : {std::pair{a, b}, std::pair{transpose(a), transpose(b)}})
      for (std::size_t r = 0; r < uq; ++r)
        for (std::size_t c = 0; c < uq; ++c, ++row)
          for (std::size_t t = 0; t < uq; ++t) {
            sys(row, static_cast<Eigen::Index>(r * uq + t)) += aa(t, c);
            sys(row, static_cast<Eigen::Index>(t * uq + c)) -= bb(r, t);
          }
  }
  const Eigen::MatrixXd null = kernel(sys.topRows(row), 1e-9);
  if (null.cols() == 0) {
    out.conclusive = true;
    out.report = "no nonzero intertwiner exists";
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(null.rows());
    for (Eigen::Index j = 0; j < null.cols(); ++j) x += gauss(rng) * null.col(j);
    Matrix<double> xm(uq, uq);
    for (std::size_t t = 0; t < uq * uq; ++t) xm.data()[t] = x(static_cast<Eigen::Index>(t));
    auto v = verify(pair, polar_orthogonal(xm), options.tol, OrthoMethod::binary);
    if (v.accepted) {
      out.certificate = std::move(v.certificate);
      return out;
    }
  }
  if (options.fallback) {
    out.log.push_back("heuristic");
    if (auto c = heuristic_search(pair, options.heuristic)) {
      out.certificate = std::move(c);
      return out;
    }
  }
  out.report = "no orthogonal intertwiner found";
  return out;
}

namespace {

struct Slices {
  std::vector<Signature<double>> left;
  std::vector<Signature<double>> right;
  std::string mismatch;
};

// Every input is either free over z or pinned to a solved coordinate; at least
// one is free. Fully pinned entries are compared directly.
Slices slice_pair(const std::vector<Signature<double>>& left, const std::vector<Signature<double>>& right,
                  const std::vector<int>& z, const std::vector<int>& solved, double tol) {
  Slices out;
  const int s = static_cast<int>(z.size());
  const int choices = 1 + static_cast<int>(solved.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    const int n = left[i].arity();
    const double scale = std::max({1.0, max_abs(left[i]), max_abs(right[i])});
    std::vector<int> pick(static_cast<std::size_t>(n), 0);  // 0 free, c > 0 solved[c − 1]
    do {
      std::vector<int> free_axes;
      for (int p = 0; p < n; ++p)
        if (pick[static_cast<std::size_t>(p)] == 0) free_axes.push_back(p);
      std::vector<int> full(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p)
        if (pick[static_cast<std::size_t>(p)] > 0)
          full[static_cast<std::size_t>(p)] = solved[static_cast<std::size_t>(pick[static_cast<std::size_t>(p)] - 1)];
      if (free_axes.empty() && n > 0) {
        const double a = left[i].at(full), b = right[i].at(full);
        if (std::abs(a - b) > tol * scale && out.mismatch.empty())
          out.mismatch = "signature " + std::to_string(i) + " differs at a fully pinned entry (" + std::to_string(a) +
                         " against " + std::to_string(b) + ")";
        continue;
      }
      const int a = static_cast<int>(free_axes.size());
      std::vector<double> lv, rv;
      std::vector<int> x(static_cast<std::size_t>(a), 0);
      do {
        for (int t = 0; t < a; ++t)
          full[static_cast<std::size_t>(free_axes[static_cast<std::size_t>(t)])] = z[static_cast<std::size_t>(x[static_cast<std::size_t>(t)])];
        lv.push_back(n == 0 ? left[i][0] : left[i].at(full));
        rv.push_back(n == 0 ? right[i][0] : right[i].at(full));
      } while (next_tuple(s, x));
      out.left.emplace_back(s, a, std::move(lv));
      out.right.emplace_back(s, a, std::move(rv));
    } while (n > 0 && next_tuple(choices, pick));
  }
  return out;
}

}  // namespace

SearchOutcome domain_induction(const SimilarPair<double>& pair, const Matrix<double>& d, const LeafSolver& leaf,
                               double tol) {
  const int q = pair.domain();
  const auto uq = static_cast<std::size_t>(q);
  require(d.rows() == uq && d.square(), ErrorCode::dimension_mismatch, "D must be q x q");
  require(is_diagonal(d, tol), ErrorCode::invalid_argument, "D must be diagonal");
  const double scale = std::max(1.0, max_abs(d));
  bool shared = false;
  for (std::size_t i = 0; i < pair.size() && !shared; ++i)
    shared = pair.left()[i].arity() == 2 && max_abs_diff(binary_matrix(pair.left()[i]), d) <= tol * scale &&
             max_abs_diff(binary_matrix(pair.partner(i)), d) <= tol * scale;
  require(shared, ErrorCode::invalid_argument, "D is not a corresponding binary signature on both sides");
  auto fam = vandermonde_indicators(d);
  require(fam.level_sets.size() >= 2, ErrorCode::invalid_argument, "D lies in the span of I");

  SearchOutcome out;
  out.log.push_back("level sets " + std::to_string(fam.level_sets.size()));
  const auto& left = pair.left();
  auto right = pair.aligned_right();
  std::vector<int> solved;
  Matrix<double> h(uq, uq);
  for (const auto& z : fam.level_sets) {
    auto sl = slice_pair(left, right, z, solved, tol);
    std::string zname;
    for (int v : z) zname += (zname.empty() ? "" : ",") + std::to_string(v);
    if (!sl.mismatch.empty()) {
      out.conclusive = true;
      out.report = "level set {" + zname + "}: " + sl.mismatch;
      return out;
    }
    auto sub = leaf(SimilarPair<double>(std::move(sl.left), std::move(sl.right)));
    if (!sub.found()) {
      out.report = "level set {" + zname + "} unsolved: " + sub.report;
      return out;
    }
    const auto& hz = sub.certificate->h.matrix;
    Matrix<double> k = Matrix<double>::identity(uq);
    for (std::size_t a = 0; a < z.size(); ++a)
      for (std::size_t b = 0; b < z.size(); ++b) {
        const auto za = static_cast<std::size_t>(z[a]), zb = static_cast<std::size_t>(z[b]);
        k(za, zb) = hz(a, b);
        h(za, zb) = hz(a, b);
      }
    right = apply_transform(transpose(k), right);
    solved.insert(solved.end(), z.begin(), z.end());
  }
  auto v = verify(pair, h, tol, OrthoMethod::induction);
  if (!v.accepted) {
    out.report = "assembled map rejected: " + v.reason;
    return out;
  }
  out.certificate = std::move(v.certificate);
  return out;
}

namespace {

SearchOutcome odeco_stage(const SimilarPair<double>& pair, const SearchOptions& opt) {
  SearchOutcome out;
  auto fl = odeco_decompose(pair.left(), 1e-7, opt.heuristic.seed);
  auto fr = odeco_decompose(pair.aligned_right(), 1e-7, opt.heuristic.seed);
  if (!fl.ok() || !fr.ok()) {
    out.report = "not simultaneously odeco: " + (fl.ok() ? fr.message : fl.message);
    return out;
  }
  std::vector<int> arities;
  for (const auto& f : pair.left()) arities.push_back(f.arity());
  auto p = signed_perm_match(fl.certificate->weights, fr.certificate->weights, arities, 1e-6);
  if (!p) {
    out.report = "decomposition weights differ beyond a signed permutation";
    return out;
  }
  auto h = transpose(fr.certificate->h.matrix) * *p * fl.certificate->h.matrix;
  auto v = verify(pair, h, opt.tol, OrthoMethod::odeco);
  if (v.accepted) out.certificate = std::move(v.certificate);
  else out.report = v.reason;
  return out;
}

SearchOutcome induction_stage(const SimilarPair<double>& pair, const SearchOptions& opt) {
  SearchOutcome out;
  const int q = pair.domain();
  const auto uq = static_cast<std::size_t>(q);
  const auto left = pair.left();
  const auto right = pair.aligned_right();
  std::vector<Matrix<double>> mg;
  auto mf = gadget_matrices(left, q, 1, 1, opt.span_budget, &right, &mg);
  if (mf.empty()) {
    out.report = "no (1,1) gadgets within budget";
    return out;
  }
  Eigen::MatrixXd off(static_cast<Eigen::Index>(uq * (uq - 1)), static_cast<Eigen::Index>(mf.size()));
  Eigen::Index row = 0;
  for (std::size_t x = 0; x < uq; ++x)
    for (std::size_t y = 0; y < uq; ++y) {
      if (x == y) continue;
      for (std::size_t j = 0; j < mf.size(); ++j) off(row, static_cast<Eigen::Index>(j)) = mf[j](x, y);
      ++row;
    }
  const Eigen::MatrixXd null = kernel(off, 1e-9);
  if (null.cols() == 0) {
    out.report = "no diagonal in the (1,1) gadget span";
    return out;
  }
  // a generic element of the diagonal subspace has the finest level sets
  std::mt19937_64 rng(opt.heuristic.seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(null.rows());
  for (Eigen::Index j = 0; j < null.cols(); ++j) c += gauss(rng) * null.col(j);
  Matrix<double> d(uq, uq), dg(uq, uq);
  for (std::size_t j = 0; j < mf.size(); ++j) {
    const double cj = c(static_cast<Eigen::Index>(j));
    for (std::size_t x = 0; x < uq; ++x) d(x, x) += cj * mf[j](x, x);
    dg = dg + cj * mg[j];
  }
  const double scale = std::max(1e-300, max_abs(d));
  double lo = d(0, 0), hi = d(0, 0);
  for (std::size_t x = 0; x < uq; ++x) {
    lo = std::min(lo, d(x, x));
    hi = std::max(hi, d(x, x));
  }
  if (hi - lo <= 1e-6 * scale) {
    out.report = "every diagonal in the (1,1) gadget span is a multiple of I";
    return out;
  }
  if (!is_symmetric_matrix(dg, 1e-6)) {
    out.conclusive = true;
    out.report = "the partner of a diagonal gadget combination is not symmetric";
    return out;
  }
  auto eig = symmetric_eigen(0.5 * (dg + transpose(dg)));
  Matrix<double> qm(uq, uq);
  std::vector<bool> used(uq, false);
  for (std::size_t x = 0; x < uq; ++x) {
    std::size_t best = uq;
    for (std::size_t e = 0; e < uq; ++e)
      if (!used[e] && std::abs(eig.values[e] - d(x, x)) <= 1e-6 * scale &&
          (best == uq || std::abs(eig.values[e] - d(x, x)) < std::abs(eig.values[best] - d(x, x))))
        best = e;
    if (best == uq) {
      out.conclusive = true;
      out.report = "a diagonal gadget combination and its partner have different spectra";
      return out;
    }
    used[best] = true;
    for (std::size_t i = 0; i < uq; ++i) qm(i, x) = eig.vectors(i, best);
  }
  // QᵀG carries D on the right side
  auto aug_left = left;
  auto aug_right = apply_transform(transpose(qm), right);
  Signature<double> dsig(q, 2, d.data());
  aug_left.push_back(dsig);
  aug_right.push_back(dsig);
  SearchOptions inner = opt;
  inner.max_depth = opt.max_depth - 1;
  auto sub = domain_induction(SimilarPair<double>(aug_left, aug_right), d,
                              [&](const SimilarPair<double>& p) { return search(p, inner); }, opt.tol);
  out.log = sub.log;
  if (!sub.found()) {
    out.report = sub.report;
    out.conclusive = sub.conclusive;
    return out;
  }
  auto v = verify(pair, qm * sub.certificate->h.matrix, opt.tol, OrthoMethod::induction);
  if (v.accepted) out.certificate = std::move(v.certificate);
  else out.report = v.reason;
  return out;
}

}  // namespace

SearchOutcome search(const SimilarPair<double>& pair, const SearchOptions& options) {
  SearchOutcome out;
  const int q = pair.domain();
  if (pair.size() == 0) return identity_outcome(pair, options.tol, OrthoMethod::given);
  if (q == 1) {
    out = solve_q1(pair, options.tol);
    out.log.insert(out.log.begin(), "base_q1");
    return out;
  }
  auto take = [&](SearchOutcome&& stage, const char* name) {
    out.log.push_back(name);
    for (auto& l : stage.log) out.log.push_back(std::string(name) + ": " + l);
    if (!stage.report.empty()) out.log.push_back(std::string(name) + ": " + stage.report);
    if (stage.found() || stage.conclusive) {
      out.certificate = std::move(stage.certificate);
      out.report = std::move(stage.report);
      out.conclusive = stage.conclusive;
      return true;
    }
    return false;
  };
  bool all_symmetric = true, all_binary = true, some_higher = false;
  for (const auto& f : pair.left()) {
    all_binary = all_binary && f.arity() == 2;
    some_higher = some_higher || f.arity() >= 2;
  }
  for (std::size_t i = 0; i < pair.size(); ++i)
    all_symmetric = all_symmetric && is_symmetric(pair.left()[i], options.tol) && is_symmetric(pair.partner(i), options.tol);

  if (all_symmetric && some_higher && take(odeco_stage(pair, options), "odeco")) return out;
  if (all_binary) {
    BinaryOptions bo;
    bo.tol = options.tol;
    bo.seed = options.heuristic.seed;
    bo.fallback = false;
    if (take(solve_binary(pair, bo), "binary")) return out;
  }
  if (options.max_depth > 0 && take(induction_stage(pair, options), "induction")) return out;
  out.log.push_back("heuristic");
  if (auto c = heuristic_search(pair, options.heuristic)) {
    out.certificate = std::move(c);
    return out;
  }
  out.report = "no certificate found";
  return out;
}

Matrix<double> svd_normalize(const Signature<double>& f, const BlockPartition& p) {
  require(f.arity() == 2, ErrorCode::arity_mismatch, "svd_normalize needs a binary signature");
  require(p.q == f.domain(), ErrorCode::domain_mismatch, "partition domain differs from signature domain");
  p.validate();
  const auto a = binary_matrix(f);
  Eigen::MatrixXd blk(static_cast<Eigen::Index>(p.x.size()), static_cast<Eigen::Index>(p.y.size()));
  for (std::size_t i = 0; i < p.x.size(); ++i)
    for (std::size_t j = 0; j < p.y.size(); ++j)
      blk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a(static_cast<std::size_t>(p.x[i]), static_cast<std::size_t>(p.y[j]));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(blk, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix<double> t(static_cast<std::size_t>(p.q), static_cast<std::size_t>(p.q));
  for (std::size_t i = 0; i < p.x.size(); ++i)
    for (std::size_t j = 0; j < p.x.size(); ++j)
      t(static_cast<std::size_t>(p.x[i]), static_cast<std::size_t>(p.x[j])) =
          svd.matrixU()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < p.y.size(); ++i)
    for (std::size_t j = 0; j < p.y.size(); ++j)
      t(static_cast<std::size_t>(p.y[i]), static_cast<std::size_t>(p.y[j])) =
          svd.matrixV()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
  return t;
}

}  // namespace holant
