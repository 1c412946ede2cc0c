#include <doctest.h>

#include "gadget/contraction.hpp"
#include "gadget/operations.hpp"
#include "gadget/standard.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tensor_core/ops.hpp"

using namespace holant;
using namespace holant::testing;
using R = Rational;

namespace {

std::vector<Signature<R>> random_table(Rng& rng, int q) {
  std::vector<Signature<R>> t;
  int k = uniform_int(rng, 1, 3);
  // one odd arity keeps every leg count reachable
  t.push_back(random_signature<R>(rng, q, uniform_int(rng, 0, 1) ? 1 : 3));
  for (int i = 1; i < k; ++i) t.push_back(random_signature<R>(rng, q, uniform_int(rng, 1, 3)));
  return t;
}

Signature<R> unary(int a, int b) { return Signature<R>(2, 1, {R(a), R(b)}); }

}  // namespace

TEST_CASE("standard signatures") {
  CHECK(flatten(standard::equality<R>(2, 4), 1, 1).matrix == Matrix<R>::identity(4));
  auto s = flatten(standard::swap<R>(2), 2, 2).matrix;
  // x = (0,1) is row 1; y = (1,0) is column 2
  CHECK(s(1, 2) == 1);
  CHECK(s(1, 1) == 0);
  Rng rng(1);
  auto f = random_signature<R>(rng, 3, 3);
  std::vector<int> x(3, 0);
  do {
    R v = 1;
    // ⟨F, ⊗ pin(x_i)⟩ = F_x
    auto p = tensor_product(tensor_product(standard::pin<R>(x[0], 3), standard::pin<R>(x[1], 3)),
                            standard::pin<R>(x[2], 3));
    CHECK(inner_product(f, p) == f.at(x));
  } while (next_tuple(3, x));
  CHECK(flatten(standard::indicator<R>({0, 2}, 3), 1, 1).matrix == Matrix<R>::diagonal(std::vector<R>{1, 0, 1}));
  CHECK_THROWS_AS(standard::pin<R>(3, 3), Error);
  CHECK_THROWS_AS(standard::braid<R>({0, 0}, 2), Error);
  CHECK_THROWS_AS(standard::indicator<R>({5}, 3), Error);
}

TEST_CASE("braid flattening is the permutation routing matrix") {
  std::vector<int> sigma{2, 0, 1};
  auto s = flatten(standard::braid<R>(sigma, 2), 3, 3).matrix;
  std::vector<int> x(3, 0);
  do {
    std::vector<int> y(3, 0);
    do {
      bool route = true;
      for (int i = 0; i < 3; ++i) route = route && x[i] == y[sigma[i]];
      CHECK(s(tuple_index(2, x), tuple_index(2, y)) == (route ? 1 : 0));
    } while (next_tuple(2, y));
  } while (next_tuple(2, x));
}

TEST_CASE("single vertex gadget gives the flattening") {
  Rng rng(2);
  auto f = random_signature<R>(rng, 3, 3);
  for (int m = 0; m <= 3; ++m) CHECK(gadget_matrix(standard::single_vertex(f, m)) == flatten(f, m, 3 - m));
}

TEST_CASE("wires and loops") {
  CHECK(gadget_matrix(standard::wire<R>(3)).matrix == Matrix<R>::identity(3));
  CHECK(holant_value(standard::loop_grid<R>(3, 1)) == 3);
  CHECK(holant_value(standard::loop_grid<R>(2, 3)) == 8);
  auto closed = compose(standard::cup<R>(3), standard::cap<R>(3));
  CHECK(closed.loops() == 1);
  CHECK(holant_value(closed) == 3);
  auto pinned = pivot(standard::wire<R>(2), 1);
  CHECK(pinned.m() == 2);
  CHECK(gadget_matrix(pinned).matrix == Matrix<R>(4, 1, {1, 0, 0, 1}));
  CHECK(gadget_matrix(pivot(standard::wire<R>(2), -1)).matrix == Matrix<R>(1, 4, {1, 0, 0, 1}));
}

TEST_CASE("Holant examples") {
  auto f = unary(1, 2);
  Gadget<R> two(2, {f}, {Vertex{0, {0}}, Vertex{0, {0}}}, {}, 0);
  CHECK(holant_value(two) == 5);
  // K4 with the exactly-one signature counts its perfect matchings
  auto pm = standard::perfect_matching<R>(3);
  // edges 01:0 02:1 03:2 12:3 13:4 23:5
  Gadget<R> k4(2, {pm}, {Vertex{0, {0, 1, 2}}, Vertex{0, {0, 3, 4}}, Vertex{0, {1, 3, 5}}, Vertex{0, {2, 4, 5}}}, {},
               0);
  CHECK(holant_value(k4) == 3);
  CHECK_THROWS_AS(holant_value(standard::wire<R>(2)), Error);
}

TEST_CASE("gadget validation") {
  auto f = standard::equality<R>(2, 2);
  CHECK_THROWS_AS(Gadget<R>(2, {f}, {Vertex{0, {0}}}, {0}, 0), Error);
  CHECK_THROWS_AS(Gadget<R>(2, {f}, {Vertex{0, {0, 1}}}, {0}, 0), Error);
  CHECK_THROWS_AS(Gadget<R>(2, {f}, {Vertex{1, {0, 1}}}, {0, 1}, 0), Error);
  CHECK_THROWS_AS(Gadget<R>(2, {f}, {Vertex{0, {0, 1}}}, {0, 1}, 3), Error);
  CHECK_THROWS_AS(Gadget<R>(3, {f}, {Vertex{0, {0, 1}}}, {0, 1}, 1), Error);
}

TEST_CASE("contraction engine agrees with the brute-force edge sum") {
  Rng rng(3);
  int checked = 0;
  while (checked < 60) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    int m = uniform_int(rng, 0, 2), d = uniform_int(rng, 0, 2);
    auto k = random_gadget(rng, table, m, d, 4);
    if (ipow(q, k.edge_count()) > 4096) continue;
    ++checked;
    CHECK(gadget_signature(k) == brute_gadget_signature(k));
  }
}

TEST_CASE("contraction order does not change the result") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    auto k = random_gadget(rng, table, uniform_int(rng, 0, 2), uniform_int(rng, 0, 2), 5);
    auto greedy = gadget_signature(k);
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      CHECK(gadget_signature(k, ContractionOptions{Planner::random, seed}) == greedy);
  }
}

TEST_CASE("gadget operations are matrix homomorphisms") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    int m = uniform_int(rng, 0, 2), d = uniform_int(rng, 0, 2), e = uniform_int(rng, 0, 2);
    auto k = random_gadget(rng, table, m, d, 4);
    auto l = random_gadget(rng, table, d, e, 4);
    auto mk = gadget_matrix(k).matrix, ml = gadget_matrix(l).matrix;
    CHECK(gadget_matrix(compose(k, l)).matrix == naive_product(mk, ml));
    auto t = tensor(k, l);
    CHECK(t.m() == k.m() + l.m());
    CHECK(gadget_matrix(t).matrix == kron(mk, ml));
    CHECK(gadget_matrix(transpose(k)).matrix == transpose(mk));
    CHECK(gadget_matrix(transpose(transpose(k))).matrix == mk);
  }
}

TEST_CASE("composition with a wire") {
  Rng rng(6);
  auto table = random_table(rng, 2);
  auto k = random_gadget(rng, table, 1, 2, 3);
  auto wk = compose(standard::wire<R>(2), k);
  CHECK(gadget_matrix(wk) == gadget_matrix(k));
  CHECK(wk.vertices().size() == k.vertices().size());
  CHECK(wk.edge_count() == k.edge_count());
  CHECK_THROWS_AS(compose(k, k), Error);
}

TEST_CASE("pivot keeps the unflattened signature") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto table = random_table(rng, 2);
    int m = uniform_int(rng, 0, 3), d = uniform_int(rng, 0, 3);
    auto k = random_gadget(rng, table, m, d, 3);
    auto sig = gadget_signature(k);
    for (int c = -m; c <= d; ++c) {
      auto p = pivot(k, c);
      CHECK(unflatten(gadget_matrix(p)) == sig);
    }
    CHECK(gadget_matrix(pivot(k, 0)) == gadget_matrix(k));
    CHECK(gadget_matrix(pivot(k, d)).matrix == flatten(sig, m + d, 0).matrix);
    CHECK_THROWS_AS(pivot(k, d + 1), Error);
    CHECK_THROWS_AS(pivot(k, -m - 1), Error);
  }
}

TEST_CASE("pivot matches the explicit wire and cap construction") {
  // M' with M'_{(x, z), y} = M_{x, (y, z)}: (K ⊗ wire) ∘ (wires^{d-1} ⊗ I^{2,0})
  Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    int m = uniform_int(rng, 0, 2), d = uniform_int(rng, 1, 3);
    auto k = random_gadget(rng, table, m, d, 3);
    auto built = compose(tensor(k, standard::wire<R>(q)),
                         tensor(standard::wires<R>(q, d - 1), standard::cap<R>(q)));
    CHECK(gadget_matrix(built) == gadget_matrix(pivot(k, 1)));
  }
}

TEST_CASE("pairing grid computes the inner product") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    int n = uniform_int(rng, 0, 3);
    int m1 = uniform_int(rng, 0, n), m2 = uniform_int(rng, 0, n);
    auto k = random_gadget(rng, table, m1, n - m1, 3);
    auto l = random_gadget(rng, table, m2, n - m2, 3);
    CHECK(holant_value(pairing_grid(k, l)) == inner_product(gadget_signature(k), gadget_signature(l)));
  }
}

TEST_CASE("disconnected grids factor") {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    int q = uniform_int(rng, 1, 3);
    auto table = random_table(rng, q);
    auto a = random_gadget(rng, table, 0, 0, 3);
    auto b = random_gadget(rng, table, 0, 0, 3);
    CHECK(holant_value(tensor(a, b)) == holant_value(a) * holant_value(b));
  }
}

TEST_CASE("replace signatures") {
  auto f = standard::boolean_symmetric<R>({1, 1, 1, 0, 0});
  auto g = standard::boolean_symmetric<R>({0, 0, 1, 0, 0});
  auto e = standard::boolean_symmetric<R>({0, 1, 0});
  Gadget<R> grid(2, {f}, {Vertex{0, {0, 1, 2, 3}}, Vertex{0, {0, 1, 2, 3}}}, {}, 0);
  SimilarPair<R> id({f}, {f});
  CHECK(replace_signatures(grid, id) == grid);
  SimilarPair<R> fg({f, e}, {g, e});
  auto swapped = replace_signatures(grid, fg);
  CHECK(swapped.vertices() == grid.vertices());
  CHECK(holant_value(grid) == 11);
  CHECK(holant_value(swapped) == 6);
  CHECK_THROWS_AS(replace_signatures(grid, SimilarPair<R>({e}, {e})), Error);
  // a bipartite grid between the binary and the 4-ary signature keeps its value
  Gadget<R> bip(2, {e, f},
                {Vertex{0, {0, 1}}, Vertex{0, {2, 3}}, Vertex{1, {0, 1, 2, 3}}}, {}, 0);
  // ports 0..3 of the 4-ary vertex pair up with the two binary vertices
  CHECK(holant_value(bip) == holant_value(replace_signatures(bip, fg)));
}

TEST_CASE("quantum gadgets are linear") {
  Rng rng(11);
  auto table = random_table(rng, 2);
  auto k = random_gadget(rng, table, 1, 1, 3);
  QuantumGadget<R> single{{{R(1), k}}};
  CHECK(quantum_matrix(single) == gadget_matrix(k));
  QuantumGadget<R> diff{{{R(1), k}, {R(-1), k}}};
  CHECK(quantum_matrix(diff).matrix == Matrix<R>(2, 2));
  QuantumGadget<R> wires{{{R(3), standard::wire<R>(2)}, {R(1, 2), standard::wire<R>(2)}}};
  CHECK(quantum_matrix(wires).matrix == R(7, 2) * Matrix<R>::identity(2));
  QuantumGadget<R> bad{{{R(1), k}, {R(1), standard::cup<R>(2)}}};
  CHECK_THROWS_AS(quantum_matrix(bad), Error);
  CHECK_THROWS_AS(quantum_matrix(QuantumGadget<R>{}), Error);
}

TEST_CASE("batch evaluation matches sequential evaluation") {
  Rng rng(12);
  std::vector<Gadget<R>> grids;
  auto table = random_table(rng, 2);
  for (int i = 0; i < 12; ++i) grids.push_back(random_gadget(rng, table, 0, 0, 4));
  auto seq = holant_batch(grids, 1);
  auto par = holant_batch(grids, 3);
  CHECK(seq == par);
  for (std::size_t i = 0; i < grids.size(); ++i) CHECK(seq[i] == holant_value(grids[i]));
}
