#include <doctest.h>

#include "gadget/standard.hpp"
#include "indist/testers.hpp"
#include "ortho/ortho.hpp"
#include "spectral/spectral.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holant;
using namespace holant::testing;
using R = Rational;
using D = Signature<double>;

namespace {

D scalar_sig(int n, double v) { return D(1, n, {v}); }

SimilarPair<double> rotated_pair(const std::vector<D>& left, const Matrix<double>& h) {
  return SimilarPair<double>(left, apply_transform(h, left));
}

// Random weights on random GenEQs, rotated by a random orthogonal K.
std::vector<D> odeco_set(Rng& rng, int q, int count) {
  auto k = haar_orthogonal(rng, q);
  std::vector<D> set;
  for (int i = 0; i < count; ++i) {
    int n = uniform_int(rng, 2, 4);
    std::vector<double> w;
    for (int x = 0; x < q; ++x) w.push_back(uniform_real(rng, 0.5, 2.0) * (uniform_int(rng, 0, 1) ? 1 : -1));
    set.push_back(apply_transform(k, standard::gen_equality<double>(n, w)));
  }
  return set;
}

// F = F₁ ⊕ F₂ on blocks {0,1}, {2,3}, plus D = diag(1,1,2,2).
SimilarPair<double> two_block_instance(Rng& rng, Matrix<double>* h_out = nullptr) {
  std::vector<D> left;
  for (int i = 0; i < 2; ++i) {
    int n = uniform_int(rng, 2, 3);
    left.push_back(direct_sum(random_signature<double>(rng, 2, n), random_signature<double>(rng, 2, n)));
  }
  Matrix<double> d = Matrix<double>::diagonal(std::vector<double>{1, 1, 2, 2});
  left.push_back(D(4, 2, d.data()));
  auto h = direct_sum(haar_orthogonal(rng, 2), haar_orthogonal(rng, 2));
  if (h_out) *h_out = h;
  return rotated_pair(left, h);
}

Signature<R> sym(std::vector<int> w) {
  std::vector<R> v(w.begin(), w.end());
  return standard::boolean_symmetric<R>(v);
}

}  // namespace

TEST_CASE("row reduction and null spaces") {
  Matrix<R> a(2, 3, {R(1), R(2), R(3), R(2), R(4), R(6)});
  CHECK(rank(a) == 1);
  auto ns = nullspace(a);
  CHECK(ns.size() == 2);
  Rng rng(50);
  for (int trial = 0; trial < 30; ++trial) {
    int r = uniform_int(rng, 1, 4), c = uniform_int(rng, 1, 5);
    auto m = random_matrix<R>(rng, r, c);
    auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == static_cast<std::size_t>(c));
    for (const auto& v : basis)
      for (int i = 0; i < r; ++i) {
        R s(0);
        for (int j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    auto md = convert<double>(m);
    CHECK(rank(md) == rank(m));
  }
}

TEST_CASE("verify accepts exact transforms and rejects perturbations") {
  Rng rng(51);
  auto f = random_signature<R>(rng, 3, 3);
  SimilarPair<R> same({f}, {f});
  auto id = verify(same, Matrix<R>::identity(3));
  CHECK(id.accepted);
  CHECK(id.certificate.residual == 0.0);

  auto h = cayley_orthogonal(rng, 3);
  SimilarPair<R> rot({f}, {apply_transform(h, f)});
  CHECK(verify(rot, h).accepted);

  auto hd = haar_orthogonal(rng, 3);
  auto fd = random_signature<double>(rng, 3, 3);
  auto pd = rotated_pair({fd}, hd);
  auto ok = verify(pd, hd);
  CHECK(ok.accepted);
  CHECK(ok.certificate.residual <= 1e-12);
  auto bumped = hd;
  bumped(0, 1) += 1e-3;
  auto bad = verify(pd, bumped);
  CHECK_FALSE(bad.accepted);
  CHECK_FALSE(bad.reason.empty());
  CHECK_FALSE(verify(pd, Matrix<double>::identity(2)).accepted);
}

TEST_CASE("q = 1 parity rule") {
  SimilarPair<double> flip({scalar_sig(2, 2), scalar_sig(3, 3)}, {scalar_sig(2, 2), scalar_sig(3, -3)});
  auto r = solve_q1(flip);
  REQUIRE(r.found());
  CHECK(r.certificate->h.matrix(0, 0) == -1.0);
  CHECK(r.certificate->method == OrthoMethod::base_q1);

  SimilarPair<double> same({scalar_sig(2, 2), scalar_sig(3, 3)}, {scalar_sig(2, 2), scalar_sig(3, 3)});
  REQUIRE(solve_q1(same).found());
  CHECK(solve_q1(same).certificate->h.matrix(0, 0) == 1.0);

  auto even = solve_q1(SimilarPair<R>({Signature<R>(1, 2, {R(2)})}, {Signature<R>(1, 2, {R(5)})}));
  CHECK_FALSE(even.found());
  CHECK(even.conclusive);
  CHECK(even.report.find("even-arity mismatch") == 0);
  CHECK(even.report.find("2 against 5") != std::string::npos);

  auto normr = solve_q1(SimilarPair<double>({scalar_sig(1, 2)}, {scalar_sig(1, 3)}));
  CHECK(normr.report.find("norm mismatch") == 0);

  auto mixed = solve_q1(SimilarPair<double>({scalar_sig(1, 2), scalar_sig(3, 1)}, {scalar_sig(1, 2), scalar_sig(3, -1)}));
  CHECK(mixed.report.find("mixed parity") == 0);

  CHECK_THROWS_AS(solve_q1(SimilarPair<double>({D(2, 1, {1, 0})}, {D(2, 1, {1, 0})})), Error);
}

TEST_CASE("q = 1 solutions agree with brute force over both signs") {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    int k = uniform_int(rng, 1, 4);
    std::vector<Signature<R>> l, r;
    for (int i = 0; i < k; ++i) {
      int n = uniform_int(rng, 0, 4);
      R v(uniform_int(rng, -2, 2));
      R w = uniform_int(rng, 0, 3) == 0 ? R(uniform_int(rng, -2, 2)) : R(uniform_int(rng, 0, 1) ? v : R(-v));
      l.emplace_back(1, n, std::vector<R>{v});
      r.emplace_back(1, n, std::vector<R>{w});
    }
    SimilarPair<R> pair(l, r);
    bool any = false;
    for (int s : {1, -1}) {
      Matrix<R> h(1, 1);
      h(0, 0) = R(s);
      any = any || verify(pair, h).accepted;
    }
    auto res = solve_q1(pair);
    CHECK(res.found() == any);
    if (res.found()) CHECK(verify(pair, convert<R>(res.certificate->h.matrix)).accepted);
  }
}

TEST_CASE("binary solver round trip") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int q = uniform_int(rng, 2, 5), k = uniform_int(rng, 1, 3);
    std::vector<D> fs;
    for (int i = 0; i < k; ++i) fs.push_back(random_signature<double>(rng, q, 2));
    auto pair = rotated_pair(fs, haar_orthogonal(rng, q));
    auto r = solve_binary(pair);
    REQUIRE(r.found());
    CHECK(r.certificate->residual <= 1e-8);
    CHECK(r.certificate->method == OrthoMethod::binary);
  }
}

TEST_CASE("binary solver on degenerate and distinct families") {
  auto id = standard::identity<double>(3);
  auto r = solve_binary(SimilarPair<double>({id}, {id}));
  REQUIRE(r.found());
  CHECK(verify(SimilarPair<double>({id}, {id}), r.certificate->h.matrix).accepted);

  // each member is similar on its own, the family is not
  Rng rng(54);
  auto a = random_signature<double>(rng, 3, 2);
  auto b = random_signature<double>(rng, 3, 2);
  auto h = haar_orthogonal(rng, 3);
  SimilarPair<double> broken({a, b}, {apply_transform(h, a), apply_transform(haar_orthogonal(rng, 3), b)});
  auto miss = solve_binary(broken);
  CHECK_FALSE(miss.found());
  CHECK(miss.conclusive);
  CHECK(miss.report.find("trace word differs") == 0);

  CHECK_THROWS_AS(solve_binary(SimilarPair<double>({D(2, 3, std::vector<double>(8, 1.0))}, {D(2, 3, std::vector<double>(8, 1.0))})),
                  Error);
}

TEST_CASE("heuristic search") {
  Rng rng(55);
  auto f = random_signature<double>(rng, 3, 3);
  auto fixed = heuristic_search(SimilarPair<double>({f}, {f}));
  REQUIRE(fixed);
  CHECK(fixed->h.matrix == Matrix<double>::identity(3));
  CHECK(fixed->method == OrthoMethod::heuristic);

  auto bipartite_blind = convert<double>(SimilarPair<R>({sym({0, 1, 0}), sym({1, 1, 1, 0, 0})}, {sym({0, 1, 0}), sym({0, 0, 1, 0, 0})}));
  HeuristicOptions few;
  few.restarts = 3;
  few.iters = 50;
  CHECK_FALSE(heuristic_search(bipartite_blind, few).has_value());

  int found = 0;
  for (int trial = 0; trial < 20; ++trial) {
    int q = uniform_int(rng, 2, 3);
    auto set = odeco_set(rng, q, uniform_int(rng, 1, 2));
    auto pair = rotated_pair(set, haar_orthogonal(rng, q));
    if (auto c = heuristic_search(pair)) {
      ++found;
      CHECK(c->residual <= 1e-8);
    }
  }
  CHECK(found >= 18);
}

TEST_CASE("heuristic search is deterministic and parallel restarts agree") {
  Rng rng(56);
  auto f = random_signature<double>(rng, 3, 3);
  auto pair = rotated_pair({f}, haar_orthogonal(rng, 3));
  HeuristicOptions one;
  one.seed = 7;
  auto a = heuristic_search(pair, one);
  auto b = heuristic_search(pair, one);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->h.matrix == b->h.matrix);
  one.workers = 3;
  auto c = heuristic_search(pair, one);
  REQUIRE(c);
  CHECK(c->h.matrix == a->h.matrix);
}

TEST_CASE("domain induction on two-block instances") {
  Rng rng(57);
  SearchOptions opt;
  LeafSolver leaf = [&](const SimilarPair<double>& p) { return search(p, opt); };
  const auto d = Matrix<double>::diagonal(std::vector<double>{1, 1, 2, 2});
  for (int trial = 0; trial < 10; ++trial) {
    auto pair = two_block_instance(rng);
    auto r = domain_induction(pair, d, leaf);
    REQUIRE(r.found());
    CHECK(r.certificate->residual <= 1e-8);
    CHECK(r.certificate->method == OrthoMethod::induction);
    const auto& h = r.certificate->h.matrix;
    CHECK(orthogonality_error(submatrix(h, {0, 1}, {0, 1})) <= 1e-9);
    CHECK(orthogonality_error(submatrix(h, {2, 3}, {2, 3})) <= 1e-9);
    CHECK(max_abs(submatrix(h, {0, 1}, {2, 3})) == 0.0);
  }
}

TEST_CASE("domain induction preconditions and singleton level sets") {
  Rng rng(58);
  SearchOptions opt;
  LeafSolver leaf = [&](const SimilarPair<double>& p) { return search(p, opt); };
  auto c = Matrix<double>::diagonal(std::vector<double>{3, 3, 3});
  auto csig = D(3, 2, c.data());
  auto f = random_signature<double>(rng, 3, 3);
  CHECK_THROWS_AS(domain_induction(SimilarPair<double>({f, csig}, {f, csig}), c, leaf), Error);
  auto distinct = Matrix<double>::diagonal(std::vector<double>{1, 2, 3});
  CHECK_THROWS_AS(domain_induction(SimilarPair<double>({f}, {f}), distinct, leaf), Error);

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> signs;
    for (int x = 0; x < 3; ++x) signs.push_back(uniform_int(rng, 0, 1) ? 1.0 : -1.0);
    auto flip = Matrix<double>::diagonal(signs);
    std::vector<D> left{random_signature<double>(rng, 3, 3), random_signature<double>(rng, 3, 2),
                        D(3, 2, distinct.data())};
    auto pair = rotated_pair(left, flip);
    auto r = domain_induction(pair, distinct, leaf);
    REQUIRE(r.found());
    const auto& h = r.certificate->h.matrix;
    CHECK(is_diagonal(h, 0.0));
    for (int x = 0; x < 3; ++x) CHECK(h(x, x) == signs[static_cast<std::size_t>(x)]);
  }
}

TEST_CASE("gadget spans") {
  GridBudget b{2, 8};
  auto wire = gadget_span<R>({}, 3, 1, 1, b);
  REQUIRE(wire.basis.size() == 1);
  CHECK(wire.basis[0] == Matrix<R>::identity(3));
  auto cup = gadget_span<R>({}, 2, 0, 2, b);
  REQUIRE(cup.basis.size() == 1);
  CHECK(cup.basis[0] == Matrix<R>(1, 4, {R(1), R(0), R(0), R(1)}));

  // F invariant under the coordinate swap on q = 2
  Rng rng(59);
  auto swap = Matrix<R>(2, 2, {R(0), R(1), R(1), R(0)});
  for (int trial = 0; trial < 3; ++trial) {
    auto g = random_signature<R>(rng, 2, 3);
    auto f = add(g, apply_transform(swap, g));
    REQUIRE(apply_transform(swap, f) == f);
    for (auto [m, d] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{0, 2}}) {
      auto span = gadget_span<R>({f}, 2, m, d, GridBudget{2, 8});
      CHECK(!span.basis.empty());
      for (const auto& bm : span.basis) CHECK(kron_power(swap, m) * bm * kron_power(transpose(swap), d) == bm);
    }
  }
}

TEST_CASE("gadget spans grow with the budget") {
  Rng rng(60);
  for (int trial = 0; trial < 3; ++trial) {
    auto f = random_signature<double>(rng, 2, 3);
    auto g = random_signature<double>(rng, 2, 2);
    auto small = gadget_span<double>({f, g}, 2, 1, 1, GridBudget{1, 6});
    auto big = gadget_span<double>({f, g}, 2, 1, 1, GridBudget{2, 8});
    CHECK(small.basis.size() <= big.basis.size());
    for (const auto& s : small.basis) {
      auto rest = s;
      for (const auto& bb : big.basis) {
        double c = 0;
        for (std::size_t i = 0; i < s.data().size(); ++i) c += s.data()[i] * bb.data()[i];
        rest = rest - c * bb;
      }
      CHECK(max_abs(rest) <= 1e-10);
    }
  }
}

TEST_CASE("search pipeline stages") {
  Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    int q = uniform_int(rng, 2, 4);
    auto pair = rotated_pair(odeco_set(rng, q, 2), haar_orthogonal(rng, q));
    auto r = search(pair);
    REQUIRE(r.found());
    CHECK(r.certificate->method == OrthoMethod::odeco);
  }
  auto bin = rotated_pair({random_signature<double>(rng, 3, 2)}, haar_orthogonal(rng, 3));
  auto rb = search(bin);
  REQUIRE(rb.found());
  CHECK(rb.certificate->method == OrthoMethod::binary);

  // a unary and a ternary make the (1,1) span contain a non-scalar diagonal
  for (int trial = 0; trial < 5; ++trial) {
    auto u = random_signature<double>(rng, 3, 1);
    auto f = random_signature<double>(rng, 3, 3);
    auto pair = rotated_pair({u, f}, haar_orthogonal(rng, 3));
    auto r = search(pair);
    REQUIRE(r.found());
    CHECK(r.certificate->residual <= 1e-8);
  }

  auto q1 = search(SimilarPair<double>({scalar_sig(3, 2)}, {scalar_sig(3, -2)}));
  REQUIRE(q1.found());
  CHECK(q1.certificate->method == OrthoMethod::base_q1);
}

TEST_CASE("every certificate is sound against the Holant tester") {
  Rng rng(62);
  GridBudget budget{3, 8};
  for (int trial = 0; trial < 10; ++trial) {
    int q = uniform_int(rng, 2, 3);
    std::vector<D> fs{random_signature<double>(rng, q, uniform_int(rng, 1, 3))};
    SimilarPair<double> pair = trial % 2 ? rotated_pair(fs, haar_orthogonal(rng, q))
                                         : SimilarPair<double>(fs, {random_signature<double>(rng, q, fs[0].arity())});
    auto r = search(pair);
    if (!r.found()) continue;
    CHECK(verify(pair, r.certificate->h.matrix).accepted);
    CHECK_FALSE(holant_indist(pair, budget).distinguished());
  }
}

TEST_CASE("svd normalization diagonalizes the off-diagonal block") {
  Rng rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    int q = uniform_int(rng, 2, 4);
    int nx = uniform_int(rng, 1, q - 1);
    std::vector<int> x;
    for (int v = 0; v < nx; ++v) x.push_back(v);
    auto p = BlockPartition::from_x(q, x);
    auto f = random_signature<double>(rng, q, 2);
    auto t = svd_normalize(f, p);
    CHECK(orthogonality_error(t) <= 1e-12);
    CHECK(max_abs(submatrix(t, p.x, p.y)) == 0.0);
    auto tf = apply_transform(t, f);
    auto blk = submatrix(Matrix<double>(static_cast<std::size_t>(q), static_cast<std::size_t>(q), tf.values()), p.x, p.y);
    double prev = 1e300;
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) {
        if (i == j) {
          CHECK(blk(i, j) >= -1e-12);
          CHECK(blk(i, j) <= prev + 1e-12);
          prev = blk(i, j);
        } else {
          CHECK(std::abs(blk(i, j)) <= 1e-12);
        }
      }
  }
}
