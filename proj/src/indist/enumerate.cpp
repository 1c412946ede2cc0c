#include "indist/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tensor_core/ops.hpp"

namespace holant {

void GridBudget::validate() const {
  require(max_vertices >= 0 && max_total_degree >= 0, ErrorCode::invalid_argument,
          "grid budget bounds must be non-negative");
  if (bipartite) {
    for (int a : bipartite->first)
      for (int b : bipartite->second)
        require(a != b, ErrorCode::invalid_argument, "a signature cannot sit on both bipartite sides");
  }
}

namespace {

constexpr int kBoundaryCode = 1 << 20;
constexpr std::size_t kMaxRelabelings = 40320;

struct Stub {
  int vertex;  // -1 for dangling stubs
  int port;    // port of the vertex, or the dangling index
  int group;   // stubs of one interchangeable group are tried once per position
  bool interchangeable;
  int side;    // -1 unconstrained, else 0 / 1
};

class Matcher {
 public:
  Matcher(std::span<const SlotInfo> slots, const GridBudget& budget, const BoundarySpec& boundary,
          const std::vector<int>& multiset, const std::function<bool(const GridShape&)>& visit)
      : slots_(slots), budget_(budget), boundary_(boundary), multiset_(multiset), visit_(visit) {
    int group = 0;
    for (std::size_t v = 0; v < multiset.size(); ++v) {
      const SlotInfo& s = slots[static_cast<std::size_t>(multiset[v])];
      int side = side_of(multiset[v]);
      int vg = group;
      for (int p = 0; p < s.arity; ++p) {
        stubs_.push_back(Stub{static_cast<int>(v), p, s.symmetric ? vg : group, s.symmetric, side});
        if (!s.symmetric) ++group;
      }
      if (s.symmetric) ++group;
    }
    int bg = group;
    for (int b = 0; b < boundary.count; ++b) {
      stubs_.push_back(Stub{-1, b, boundary.distinct ? group : bg, !boundary.distinct, -1});
      if (boundary.distinct) ++group;
    }
    match_.assign(stubs_.size(), -1);
  }

  // false when the visitor asked to stop
  bool run() { return recurse(); }

 private:
  int side_of(int slot) const {
    if (!budget_.bipartite) return -1;
    for (int a : budget_.bipartite->first)
      if (a == slot) return 0;
    return 1;
  }

  bool recurse() {
    std::size_t s = 0;
    while (s < stubs_.size() && match_[s] >= 0) ++s;
    if (s == stubs_.size()) return complete();
    std::vector<int> tried;
    for (std::size_t t = s + 1; t < stubs_.size(); ++t) {
      if (match_[t] >= 0) continue;
      const Stub& a = stubs_[s];
      const Stub& b = stubs_[t];
      if (a.side >= 0 && b.side >= 0 && a.side == b.side) continue;
      if (a.vertex < 0 && b.vertex < 0 && !boundary_.allow_wires) continue;
      if (b.interchangeable) {
        if (std::find(tried.begin(), tried.end(), b.group) != tried.end()) continue;
        tried.push_back(b.group);
      }
      match_[s] = static_cast<int>(t);
      match_[t] = static_cast<int>(s);
      bool go_on = recurse();
      match_[s] = -1;
      match_[t] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }

  bool connectivity_ok() const {
    const int nv = static_cast<int>(multiset_.size());
    // node nv stands for the boundary
    std::vector<int> parent(static_cast<std::size_t>(nv + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto node = [&](const Stub& st) { return st.vertex < 0 ? nv : st.vertex; };
    for (std::size_t s = 0; s < stubs_.size(); ++s) {
      int a = find(parent, node(stubs_[s]));
      int b = find(parent, node(stubs_[static_cast<std::size_t>(match_[s])]));
      parent[static_cast<std::size_t>(a)] = b;
    }
    if (boundary_.require_contact && boundary_.count > 0) {
      int root = find(parent, nv);
      for (int v = 0; v < nv; ++v)
        if (find(parent, v) != root) return false;
    }
    if (budget_.connected_only && nv > 1) {
      // connectivity among vertices only, ignoring paths through the boundary
      std::vector<int> inner(static_cast<std::size_t>(nv));
      std::iota(inner.begin(), inner.end(), 0);
      for (std::size_t s = 0; s < stubs_.size(); ++s) {
        const Stub& a = stubs_[s];
        const Stub& b = stubs_[static_cast<std::size_t>(match_[s])];
        if (a.vertex < 0 || b.vertex < 0) continue;
        inner[static_cast<std::size_t>(find(inner, a.vertex))] = find(inner, b.vertex);
      }
      int root = find(inner, 0);
      for (int v = 1; v < nv; ++v)
        if (find(inner, v) != root) return false;
    }
    return true;
  }

  int stub_code(const Stub& st, const std::vector<int>& pos) const {
    if (st.vertex < 0) return kBoundaryCode + (boundary_.distinct ? st.port : 0);
    return pos[static_cast<std::size_t>(st.vertex)] * 64 + (st.interchangeable ? 0 : st.port + 1);
  }

  std::vector<int> encode(const std::vector<int>& pos) const {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t s = 0; s < stubs_.size(); ++s) {
      std::size_t t = static_cast<std::size_t>(match_[s]);
      if (t < s) continue;
      int a = stub_code(stubs_[s], pos), b = stub_code(stubs_[t], pos);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> code;
    for (auto [a, b] : edges) {
      code.push_back(a);
      code.push_back(b);
    }
    return code;
  }

  // Minimum encoding over relabelings that preserve a refined vertex coloring.
  std::optional<std::vector<int>> canonical() const {
    const std::size_t nv = multiset_.size();
    std::vector<std::vector<int>> key(nv);
    for (std::size_t v = 0; v < nv; ++v) key[v].push_back(multiset_[v]);
    for (std::size_t s = 0; s < stubs_.size(); ++s) {
      const Stub& a = stubs_[s];
      if (a.vertex < 0) continue;
      const Stub& b = stubs_[static_cast<std::size_t>(match_[s])];
      int other = b.vertex < 0 ? kBoundaryCode + (boundary_.distinct ? b.port : 0)
                               : multiset_[static_cast<std::size_t>(b.vertex)];
      key[static_cast<std::size_t>(a.vertex)].push_back(other);
    }
    for (auto& k : key) std::sort(k.begin() + 1, k.end());
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    // classes of equal keys occupy consecutive positions
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    std::size_t relabelings = 1;
    for (std::size_t i = 0; i < nv;) {
      std::size_t j = i;
      while (j < nv && key[order[j]] == key[order[i]]) ++j;
      classes.emplace_back(i, j);
      for (std::size_t f = 2; f <= j - i; ++f) relabelings *= f;
      if (relabelings > kMaxRelabelings) return std::nullopt;
      i = j;
    }
    std::vector<int> pos(nv);
    std::optional<std::vector<int>> best;
    std::vector<std::size_t> current = order;
    auto assign_all = [&](auto&& self, std::size_t c) -> void {
      if (c == classes.size()) {
        for (std::size_t i = 0; i < nv; ++i) pos[current[i]] = static_cast<int>(i);
        auto code = encode(pos);
        if (!best || code < *best) best = std::move(code);
        return;
      }
      auto [lo, hi] = classes[c];
      std::sort(current.begin() + static_cast<std::ptrdiff_t>(lo), current.begin() + static_cast<std::ptrdiff_t>(hi));
      do {
        self(self, c + 1);
      } while (std::next_permutation(current.begin() + static_cast<std::ptrdiff_t>(lo),
                                     current.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    assign_all(assign_all, 0);
    return best;
  }

  bool complete() {
    if (!connectivity_ok()) return true;
    if (auto code = canonical()) {
      if (!seen_.insert(*code).second) return true;
    }
    GridShape shape;
    shape.vertex_signature = multiset_;
    shape.ports.resize(multiset_.size());
    for (std::size_t v = 0; v < multiset_.size(); ++v)
      shape.ports[v].assign(static_cast<std::size_t>(slots_[static_cast<std::size_t>(multiset_[v])].arity), -1);
    shape.legs.assign(static_cast<std::size_t>(boundary_.count), -1);
    int label = 0;
    for (std::size_t s = 0; s < stubs_.size(); ++s) {
      std::size_t t = static_cast<std::size_t>(match_[s]);
      if (t < s) continue;
      for (std::size_t u : {s, t}) {
        const Stub& st = stubs_[u];
        if (st.vertex < 0)
          shape.legs[static_cast<std::size_t>(st.port)] = label;
        else
          shape.ports[static_cast<std::size_t>(st.vertex)][static_cast<std::size_t>(st.port)] = label;
      }
      ++label;
    }
    return visit_(shape);
  }

  std::span<const SlotInfo> slots_;
  const GridBudget& budget_;
  const BoundarySpec& boundary_;
  const std::vector<int>& multiset_;
  const std::function<bool(const GridShape&)>& visit_;
  std::vector<Stub> stubs_;
  std::vector<int> match_;
  std::set<std::vector<int>> seen_;
};

bool allowed_slot(const GridBudget& budget, int slot) {
  if (!budget.bipartite) return true;
  const auto& [l, r] = *budget.bipartite;
  return std::find(l.begin(), l.end(), slot) != l.end() || std::find(r.begin(), r.end(), slot) != r.end();
}

}  // namespace

void enumerate_shapes(std::span<const SlotInfo> slots, const GridBudget& budget, const BoundarySpec& boundary,
                      const std::function<bool(const GridShape&)>& visit) {
  budget.validate();
  require(boundary.count >= 0, ErrorCode::invalid_argument, "boundary stub count must be non-negative");
  const int n = static_cast<int>(slots.size());
  if (budget.bipartite) {
    for (int i : budget.bipartite->first) require(i >= 0 && i < n, ErrorCode::invalid_argument, "bipartite index out of range");
    for (int i : budget.bipartite->second) require(i >= 0 && i < n, ErrorCode::invalid_argument, "bipartite index out of range");
  }
  if (budget.allow_vertexless_loops && boundary.count == 0) {
    GridShape loop;
    loop.loops = 1;
    if (!visit(loop)) return;
  }
  std::vector<int> usable;
  for (int i = 0; i < n; ++i)
    if (allowed_slot(budget, i)) usable.push_back(i);

  for (int nv = 0; nv <= budget.max_vertices; ++nv) {
    if (nv == 0 && boundary.count == 0) continue;
    if (nv > 0 && usable.empty()) break;
    // nondecreasing sequences over usable slots, lexicographic
    std::vector<std::size_t> pick(static_cast<std::size_t>(nv), 0);
    while (true) {
      std::vector<int> multiset;
      int degree = 0, left_degree = 0, right_degree = 0;
      for (std::size_t p : pick) {
        int slot = usable[p];
        multiset.push_back(slot);
        int a = slots[static_cast<std::size_t>(slot)].arity;
        degree += a;
        if (budget.bipartite) {
          const auto& l = budget.bipartite->first;
          (std::find(l.begin(), l.end(), slot) != l.end() ? left_degree : right_degree) += a;
        }
      }
      bool feasible = degree <= budget.max_total_degree && (degree + boundary.count) % 2 == 0;
      if (budget.bipartite && boundary.count == 0) feasible = feasible && left_degree == right_degree;
      if (budget.bipartite && boundary.count > 0)
        feasible = feasible && std::abs(left_degree - right_degree) <= boundary.count;
      if (feasible) {
        Matcher matcher(slots, budget, boundary, multiset, visit);
        if (!matcher.run()) return;
      }
      // advance
      int i = nv - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == usable.size()) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < nv; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)];
    }
  }
}

std::vector<GridShape> enumerate_grids(std::span<const SlotInfo> slots, const GridBudget& budget) {
  std::vector<GridShape> out;
  enumerate_shapes(slots, budget, BoundarySpec{}, [&](const GridShape& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

template <Scalar T>
std::vector<SlotInfo> slots_for(const std::vector<Signature<T>>& set, double tol) {
  std::vector<SlotInfo> out;
  for (const auto& f : set) out.push_back(SlotInfo{f.arity(), is_symmetric(f, tol)});
  return out;
}

template std::vector<SlotInfo> slots_for(const std::vector<Signature<Rational>>&, double);
template std::vector<SlotInfo> slots_for(const std::vector<Signature<double>>&, double);

}  // namespace holant
