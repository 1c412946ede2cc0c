#pragma once

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "gadget/gadget.hpp"
#include "tensor_core/flattening.hpp"

namespace holant {

enum class Planner { greedy, random };

struct ContractionOptions {
  Planner planner = Planner::greedy;
  std::uint64_t seed = 0;
};

namespace detail {

// Every axis has size q; labels name the axes, last label fastest.
template <Scalar T>
struct LabeledTensor {
  std::vector<int> labels;
  std::vector<T> values;
};

inline std::vector<std::size_t> strides_for(int q, std::size_t rank) {
  std::vector<std::size_t> s(rank);
  std::size_t acc = 1;
  for (std::size_t i = rank; i-- > 0;) {
    s[i] = acc;
    acc *= static_cast<std::size_t>(q);
  }
  return s;
}

// Offsets into a tensor for every tuple of a sub-index given by per-digit strides.
inline std::vector<std::size_t> offset_table(int q, const std::vector<std::size_t>& strides) {
  std::vector<std::size_t> table{0};
  for (std::size_t stride : strides) {
    std::vector<std::size_t> next;
    next.reserve(table.size() * static_cast<std::size_t>(q));
    for (std::size_t base : table)
      for (int v = 0; v < q; ++v) next.push_back(base + static_cast<std::size_t>(v) * stride);
    table = std::move(next);
  }
  return table;
}

// Sums over the diagonal of every label that occurs twice (self-loops).
template <Scalar T>
LabeledTensor<T> trace_repeated(const LabeledTensor<T>& t, int q) {
  const auto strides = strides_for(q, t.labels.size());
  std::vector<std::size_t> keep_strides, loop_strides;
  std::vector<int> keep_labels;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    std::size_t partner = t.labels.size();
    for (std::size_t j = 0; j < t.labels.size(); ++j)
      if (j != i && t.labels[j] == t.labels[i]) partner = j;
    if (partner == t.labels.size()) {
      keep_labels.push_back(t.labels[i]);
      keep_strides.push_back(strides[i]);
    } else if (i < partner) {
      loop_strides.push_back(strides[i] + strides[partner]);
    }
  }
  if (loop_strides.empty()) return t;
  const auto outer = offset_table(q, keep_strides);
  const auto inner = offset_table(q, loop_strides);
  LabeledTensor<T> out{keep_labels, std::vector<T>(outer.size(), T(0))};
  for (std::size_t o = 0; o < outer.size(); ++o) {
    T acc(0);
    for (std::size_t s : inner) acc += t.values[outer[o] + s];
    out.values[o] = acc;
  }
  return out;
}

template <Scalar T>
LabeledTensor<T> contract_pair(const LabeledTensor<T>& a, const LabeledTensor<T>& b, int q) {
  const auto sa = strides_for(q, a.labels.size());
  const auto sb = strides_for(q, b.labels.size());
  std::vector<int> out_labels;
  std::vector<std::size_t> out_sa, out_sb, sh_sa, sh_sb;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    bool shared = false;
    for (std::size_t j = 0; j < b.labels.size(); ++j)
      if (a.labels[i] == b.labels[j]) {
        sh_sa.push_back(sa[i]);
        sh_sb.push_back(sb[j]);
        shared = true;
      }
    if (!shared) {
      out_labels.push_back(a.labels[i]);
      out_sa.push_back(sa[i]);
      out_sb.push_back(0);
    }
  }
  for (std::size_t j = 0; j < b.labels.size(); ++j) {
    bool shared = false;
    for (int l : a.labels) shared = shared || l == b.labels[j];
    if (!shared) {
      out_labels.push_back(b.labels[j]);
      out_sa.push_back(0);
      out_sb.push_back(sb[j]);
    }
  }
  const auto out_a = offset_table(q, out_sa);
  const auto out_b = offset_table(q, out_sb);
  const auto sh_a = offset_table(q, sh_sa);
  const auto sh_b = offset_table(q, sh_sb);
  LabeledTensor<T> out{out_labels, std::vector<T>(out_a.size(), T(0))};
  for (std::size_t o = 0; o < out_a.size(); ++o) {
    T acc(0);
    for (std::size_t s = 0; s < sh_a.size(); ++s) {
      const T& x = a.values[out_a[o] + sh_a[s]];
      if (is_zero(x, 0.0)) continue;
      acc += x * b.values[out_b[o] + sh_b[s]];
    }
    out.values[o] = acc;
  }
  return out;
}

inline std::size_t merged_rank(const std::vector<int>& a, const std::vector<int>& b, std::size_t& shared) {
  shared = 0;
  for (int x : a)
    for (int y : b) shared += x == y;
  return a.size() + b.size() - 2 * shared;
}

}  // namespace detail

// Full contraction; axes of the result follow the leg order.
template <Scalar T>
Signature<T> gadget_signature(const Gadget<T>& k, const ContractionOptions& opt = {}) {
  using detail::LabeledTensor;
  const int q = k.domain();
  std::vector<LabeledTensor<T>> pool;
  for (const auto& v : k.vertices()) {
    LabeledTensor<T> t{v.ports, k.table()[static_cast<std::size_t>(v.signature)].values()};
    pool.push_back(detail::trace_repeated(t, q));
  }
  std::mt19937_64 rng(opt.seed);
  while (pool.size() > 1) {
    std::size_t bi = 0, bj = 1, best = SIZE_MAX;
    bool best_shares = false;
    std::vector<std::pair<std::size_t, std::size_t>> sharing;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        std::size_t shared = 0;
        std::size_t rank = detail::merged_rank(pool[i].labels, pool[j].labels, shared);
        if (shared > 0) sharing.emplace_back(i, j);
        bool better = (shared > 0 && !best_shares) || ((shared > 0) == best_shares && rank < best);
        if (better) {
          bi = i;
          bj = j;
          best = rank;
          best_shares = shared > 0;
        }
      }
    if (opt.planner == Planner::random) {
      if (!sharing.empty()) {
        auto pick = sharing[std::uniform_int_distribution<std::size_t>(0, sharing.size() - 1)(rng)];
        bi = pick.first;
        bj = pick.second;
      } else {
        bi = std::uniform_int_distribution<std::size_t>(0, pool.size() - 2)(rng);
        bj = std::uniform_int_distribution<std::size_t>(bi + 1, pool.size() - 1)(rng);
      }
    }
    pool[bi] = detail::contract_pair(pool[bi], pool[bj], q);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  LabeledTensor<T> rest = pool.empty() ? LabeledTensor<T>{{}, {T(1)}} : std::move(pool.front());

  const auto& legs = k.legs();
  const std::size_t n = legs.size();
  const auto rest_strides = detail::strides_for(q, rest.labels.size());
  std::vector<std::size_t> stride(n, 0);
  std::vector<std::size_t> partner(n, n);
  std::size_t matched = 0;
  for (std::size_t p = 0; p < n; ++p) {
    bool found = false;
    for (std::size_t r = 0; r < rest.labels.size(); ++r)
      if (rest.labels[r] == legs[p]) {
        stride[p] = rest_strides[r];
        found = true;
        ++matched;
      }
    if (!found)
      for (std::size_t o = 0; o < n; ++o)
        if (o != p && legs[o] == legs[p]) partner[p] = o;
  }
  require(matched == rest.labels.size(), ErrorCode::internal, "contraction left unmatched internal edges");

  T loop_factor(1);
  for (int i = 0; i < k.loops(); ++i) loop_factor *= T(q);
  std::vector<T> values(ipow(q, static_cast<int>(n)), T(0));
  std::vector<int> x(n, 0);
  std::size_t idx = 0;
  do {
    bool ok = true;
    std::size_t off = 0;
    for (std::size_t p = 0; p < n && ok; ++p) {
      if (partner[p] < n)
        ok = x[p] == x[partner[p]];
      else
        off += static_cast<std::size_t>(x[p]) * stride[p];
    }
    if (ok) values[idx] = rest.values[off] * loop_factor;
    ++idx;
  } while (next_tuple(q, x));
  return Signature<T>(q, static_cast<int>(n), std::move(values));
}

template <Scalar T>
Flattening<T> gadget_matrix(const Gadget<T>& k, const ContractionOptions& opt = {}) {
  return flatten(gadget_signature(k, opt), k.m(), k.d());
}

template <Scalar T>
T holant_value(const Gadget<T>& grid, const ContractionOptions& opt = {}) {
  require(grid.is_grid(), ErrorCode::invalid_argument, "Holant value needs a grid without dangling edges");
  return gadget_signature(grid, opt)[0];
}

// Independent grids evaluated on up to `workers` threads; result order matches input.
template <Scalar T>
std::vector<T> holant_batch(const std::vector<Gadget<T>>& grids, int workers = 1) {
  std::vector<T> out(grids.size());
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || grids.size() < 2) {
    for (std::size_t i = 0; i < grids.size(); ++i) out[i] = holant_value(grids[i]);
    return out;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < w; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < grids.size(); i += w) out[i] = holant_value(grids[i]);
    });
  for (auto& th : threads) th.join();
  return out;
}

}  // namespace holant
