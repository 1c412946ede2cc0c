#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "common/matrix.hpp"
#include "gadget/contraction.hpp"
#include "gadget/standard.hpp"

namespace holant {

// Multigraph; edges may repeat and may be loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const {
    require(n >= 0, ErrorCode::invalid_argument, "graph vertex count must be non-negative");
    for (auto [u, v] : edges)
      require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::invalid_argument, "graph edge endpoint out of range");
  }

  static Graph cycle(int n) {
    Graph g{n, {}};
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
  }
  static Graph complete(int n) {
    Graph g{n, {}};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
  }
  static Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    g.n += b.n;
    for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.n, v + a.n);
    return g;
  }
};

template <Scalar T>
Matrix<T> adjacency(const Graph& g) {
  g.validate();
  Matrix<T> a(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n));
  for (auto [u, v] : g.edges) {
    a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += T(1);
    if (u != v) a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) += T(1);
  }
  return a;
}

namespace detail {

template <Scalar T>
void require_symmetric_adjacency(const Matrix<T>& x) {
  require(x.square(), ErrorCode::dimension_mismatch, "adjacency matrix must be square");
  require(is_symmetric_matrix(x), ErrorCode::not_symmetric, "adjacency matrix must be symmetric");
}

}  // namespace detail

// Σ_φ Π_{(u,v) ∈ E(K)} X[φu][φv], by brute force over all maps.
template <Scalar T>
T hom_count(const Graph& k, const Matrix<T>& x) {
  k.validate();
  detail::require_symmetric_adjacency(x);
  const int q = static_cast<int>(x.rows());
  if (k.n == 0) return T(1);
  if (q == 0) return T(0);
  std::vector<int> phi(static_cast<std::size_t>(k.n), 0);
  T total(0);
  do {
    T p(1);
    for (auto [u, v] : k.edges) {
      p *= x(static_cast<std::size_t>(phi[static_cast<std::size_t>(u)]), static_cast<std::size_t>(phi[static_cast<std::size_t>(v)]));
      if (is_zero(p, 0.0)) break;
    }
    total += p;
  } while (next_tuple(q, phi));
  return total;
}

// Bipartite grid: one X-labeled binary vertex per edge of K, one equality per
// vertex of K with arity equal to its degree.
template <Scalar T>
Gadget<T> hom_grid(const Graph& k, const Matrix<T>& x) {
  k.validate();
  detail::require_symmetric_adjacency(x);
  const int q = static_cast<int>(x.rows());
  std::vector<Signature<T>> table{Signature<T>(q, 2, x.data())};
  std::map<int, int> eq_slot;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(k.n));
  std::vector<Vertex> vertices;
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    auto [u, v] = k.edges[e];
    const int a = static_cast<int>(2 * e), b = static_cast<int>(2 * e + 1);
    vertices.push_back(Vertex{0, {a, b}});
    incident[static_cast<std::size_t>(u)].push_back(a);
    incident[static_cast<std::size_t>(v)].push_back(b);
  }
  for (int v = 0; v < k.n; ++v) {
    const int deg = static_cast<int>(incident[static_cast<std::size_t>(v)].size());
    auto it = eq_slot.find(deg);
    if (it == eq_slot.end()) {
      it = eq_slot.emplace(deg, static_cast<int>(table.size())).first;
      table.push_back(standard::equality<T>(deg, q));
    }
    vertices.push_back(Vertex{it->second, incident[static_cast<std::size_t>(v)]});
  }
  return Gadget<T>(q, std::move(table), std::move(vertices), {}, 0);
}

// Canonical name of a simple graph: minimum sorted edge list over relabelings.
inline std::string graph_key(const Graph& g) {
  g.validate();
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) {
      int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) best = std::move(e);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string s = "n" + std::to_string(g.n) + ":";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(best[i].first) + std::to_string(best[i].second);
  }
  return s;
}

// Connected simple graphs up to isomorphism with 1..max_size vertices,
// ordered by vertex count, edge count, then name.
inline std::vector<Graph> connected_graphs(int max_size) {
  require(max_size >= 0 && max_size <= 6, ErrorCode::invalid_argument, "graph profile size must be in 0..6");
  std::vector<Graph> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::map<std::pair<std::size_t, std::string>, Graph> found;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      Graph g{n, {}};
      for (std::size_t b = 0; b < all.size(); ++b)
        if (mask >> b & 1u) g.edges.push_back(all[b]);
      std::vector<int> parent(static_cast<std::size_t>(n));
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
      };
      for (auto [u, v] : g.edges) parent[static_cast<std::size_t>(find(u))] = find(v);
      bool connected = true;
      for (int v = 0; v < n; ++v) connected = connected && find(v) == find(0);
      if (!connected) continue;
      found.emplace(std::make_pair(g.edges.size(), graph_key(g)), g);
    }
    for (auto& [key, g] : found) out.push_back(g);
  }
  return out;
}

template <Scalar T>
std::vector<std::pair<std::string, T>> hom_profile(const Matrix<T>& x, int max_size) {
  std::vector<std::pair<std::string, T>> out;
  for (const auto& k : connected_graphs(max_size)) out.emplace_back(graph_key(k), hom_count(k, x));
  return out;
}

}  // namespace holant
