#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "gadget/contraction.hpp"
#include "gadget/gadget.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant {

namespace detail {

struct LegRef {
  int part;
  int pos;
};

// Disjoint union of parts, then each join fuses two dangling ends into one edge.
// Chains of fused ends that close on themselves become vertexless loops.
template <Scalar T>
Gadget<T> join_parts(const std::vector<const Gadget<T>*>& parts, const std::vector<std::pair<LegRef, LegRef>>& joins,
                     const std::vector<LegRef>& new_legs, int left_count) {
  const int q = parts.front()->domain();
  std::vector<int> edge_offset, sig_offset;
  int edges = 0, sigs = 0, loops = 0;
  std::vector<Signature<T>> table;
  for (const auto* p : parts) {
    require(p->domain() == q, ErrorCode::domain_mismatch, "combining gadgets over different domains");
    edge_offset.push_back(edges);
    sig_offset.push_back(sigs);
    edges += p->edge_count();
    sigs += static_cast<int>(p->table().size());
    loops += p->loops();
    table.insert(table.end(), p->table().begin(), p->table().end());
  }
  std::vector<int> parent(static_cast<std::size_t>(edges));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) {
      parent[e] = parent[parent[e]];
      e = parent[e];
    }
    return e;
  };
  auto edge_of = [&](LegRef r) { return edge_offset[r.part] + parts[r.part]->legs()[r.pos]; };
  for (const auto& [a, b] : joins) {
    int ra = find(edge_of(a)), rb = find(edge_of(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> remaining(edges, 0);
  std::vector<Vertex> vertices;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& v : parts[p]->vertices()) {
      Vertex nv{v.signature + sig_offset[p], {}};
      for (int e : v.ports) {
        int r = find(e + edge_offset[p]);
        nv.ports.push_back(r);
        ++remaining[r];
      }
      vertices.push_back(std::move(nv));
    }
  std::vector<int> legs;
  for (const auto& r : new_legs) {
    int e = find(edge_of(r));
    legs.push_back(e);
    ++remaining[e];
  }
  for (int e = 0; e < edges; ++e)
    if (find(e) == e && remaining[e] == 0) ++loops;
  return Gadget<T>(q, std::move(table), std::move(vertices), std::move(legs), left_count, loops);
}

}  // namespace detail

// Right edge r_i of k is fused with left edge ℓ_i of l.
template <Scalar T>
Gadget<T> compose(const Gadget<T>& k, const Gadget<T>& l) {
  require(k.d() == l.m(), ErrorCode::dimension_mismatch,
          "compose needs d(K) = m(L), got " + std::to_string(k.d()) + " and " + std::to_string(l.m()));
  using detail::LegRef;
  const int nk = static_cast<int>(k.legs().size());
  std::vector<std::pair<LegRef, LegRef>> joins;
  for (int i = 0; i < k.d(); ++i) joins.push_back({{0, nk - 1 - i}, {1, i}});
  std::vector<LegRef> legs;
  for (int i = 0; i < k.m(); ++i) legs.push_back({0, i});
  for (int i = l.m(); i < static_cast<int>(l.legs().size()); ++i) legs.push_back({1, i});
  return detail::join_parts<T>({&k, &l}, joins, legs, k.m());
}

// Counterclockwise legs: K left, L left, L right, K right.
template <Scalar T>
Gadget<T> tensor(const Gadget<T>& k, const Gadget<T>& l) {
  using detail::LegRef;
  std::vector<LegRef> legs;
  for (int i = 0; i < k.m(); ++i) legs.push_back({0, i});
  for (int i = 0; i < static_cast<int>(l.legs().size()); ++i) legs.push_back({1, i});
  for (int i = k.m(); i < static_cast<int>(k.legs().size()); ++i) legs.push_back({0, i});
  return detail::join_parts<T>({&k, &l}, {}, legs, k.m() + l.m());
}

template <Scalar T>
Gadget<T> transpose(const Gadget<T>& k) {
  std::vector<int> legs(k.legs().rbegin(), k.legs().rend());
  return Gadget<T>(k.domain(), k.table(), k.vertices(), std::move(legs), k.d(), k.loops());
}

// count > 0 moves the bottom count right edges to the left side; count < 0 the reverse.
// The cyclic leg order, and hence the unflattened signature, is unchanged.
template <Scalar T>
Gadget<T> pivot(const Gadget<T>& k, int count) {
  require(count <= k.d() && -count <= k.m(), ErrorCode::invalid_argument,
          "pivot count " + std::to_string(count) + " out of range for (" + std::to_string(k.m()) + "," +
              std::to_string(k.d()) + ")");
  return Gadget<T>(k.domain(), k.table(), k.vertices(), k.legs(), k.m() + count, k.loops());
}

template <Scalar T>
Gadget<T> with_table(const Gadget<T>& k, std::vector<Signature<T>> table) {
  require(table.size() == k.table().size(), ErrorCode::invalid_argument, "replacement table size differs");
  return Gadget<T>(k.domain(), std::move(table), k.vertices(), k.legs(), k.m(), k.loops());
}

// Each table entry is located in pair.left by value and replaced by its partner.
template <Scalar T>
Gadget<T> replace_signatures(const Gadget<T>& k, const SimilarPair<T>& pair, double tol = kDefaultTol) {
  std::vector<Signature<T>> table;
  for (const auto& s : k.table()) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < pair.size(); ++i) {
      if (!approx_equal(s, pair.left()[i], tol)) continue;
      require(!hit || approx_equal(pair.partner(*hit), pair.partner(i), tol), ErrorCode::invalid_argument,
              "signature matches several left entries with different partners");
      hit = i;
    }
    require(hit.has_value(), ErrorCode::invalid_argument, "gadget signature not present in the pair's left side");
    table.push_back(pair.partner(*hit));
  }
  if (k.table().empty()) return k;
  return Gadget<T>(pair.domain(), std::move(table), k.vertices(), k.legs(), k.m(), k.loops());
}

// Grid joining the i-th dangling edges of k and l; its Holant value is ⟨K, L⟩.
template <Scalar T>
Gadget<T> pairing_grid(const Gadget<T>& k, const Gadget<T>& l) {
  require(k.legs().size() == l.legs().size(), ErrorCode::arity_mismatch, "pairing gadgets with different leg counts");
  return compose(transpose(pivot(k, k.d())), pivot(l, l.d()));
}

template <Scalar T>
struct QuantumGadget {
  std::vector<std::pair<T, Gadget<T>>> terms;

  void validate() const {
    require(!terms.empty(), ErrorCode::invalid_argument, "quantum gadget needs at least one term");
    for (const auto& [c, g] : terms)
      require(g.m() == terms.front().second.m() && g.d() == terms.front().second.d(), ErrorCode::dimension_mismatch,
              "quantum gadget terms must share (m, d)");
  }
};

template <Scalar T>
Flattening<T> quantum_matrix(const QuantumGadget<T>& qg, const ContractionOptions& opt = {}) {
  qg.validate();
  Flattening<T> out = gadget_matrix(qg.terms.front().second, opt);
  out.matrix = qg.terms.front().first * out.matrix;
  for (std::size_t i = 1; i < qg.terms.size(); ++i)
    out.matrix = out.matrix + qg.terms[i].first * gadget_matrix(qg.terms[i].second, opt).matrix;
  return out;
}

}  // namespace holant
