#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gadget/contraction.hpp"
#include "gadget/operations.hpp"
#include "gadget/standard.hpp"
#include "indist/enumerate.hpp"
#include "tensor_core/similar_pair.hpp"

namespace holant {

enum class Outcome { no_counterexample_within_budget, distinguished };

inline const char* to_string(Outcome o) {
  return o == Outcome::distinguished ? "distinguished" : "no_counterexample_within_budget";
}

// grid is labeled with the left table; the right value uses the aligned partners
template <Scalar T>
struct Witness {
  Gadget<T> grid;
  T left_value;
  T right_value;
  std::string label;
};

template <Scalar T>
struct IndistVerdict {
  Outcome outcome = Outcome::no_counterexample_within_budget;
  std::vector<Witness<T>> witnesses;  // nonempty iff distinguished
  std::size_t grids_checked = 0;
  bool numerical = !is_exact_v<T>;

  bool distinguished() const { return outcome == Outcome::distinguished; }
  const Witness<T>& witness() const {
    require(!witnesses.empty(), ErrorCode::invalid_argument, "verdict has no witness");
    return witnesses.front();
  }
};

struct IndistOptions {
  double tol = 1e-8;  // relative, float backend only
  int max_witnesses = 1;
  int workers = 1;
};

template <Scalar T>
bool values_differ(const T& a, const T& b, double tol) {
  if constexpr (is_exact_v<T>) {
    return a != b;
  } else {
    return std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

namespace detail {

template <Scalar T>
struct Comparator {
  const std::vector<Signature<T>>& left;
  const std::vector<Signature<T>>& right;
  int q;
  const IndistOptions& options;
  IndistVerdict<T> verdict{};
  std::vector<Gadget<T>> pending{};
  std::vector<std::string> labels{};

  bool done() const { return static_cast<int>(verdict.witnesses.size()) >= std::max(1, options.max_witnesses); }

  // false once enough witnesses are found
  bool push(Gadget<T> grid, std::string label = {}) {
    pending.push_back(std::move(grid));
    labels.push_back(std::move(label));
    if (pending.size() >= 64 * static_cast<std::size_t>(std::max(1, options.workers))) flush();
    return !done();
  }

  void flush() {
    if (pending.empty() || done()) return;
    std::vector<Gadget<T>> swapped;
    swapped.reserve(pending.size());
    for (const auto& g : pending) swapped.push_back(with_table(g, right));
    auto lv = holant_batch(pending, options.workers);
    auto rv = holant_batch(swapped, options.workers);
    for (std::size_t i = 0; i < pending.size() && !done(); ++i) {
      ++verdict.grids_checked;
      if (values_differ(lv[i], rv[i], options.tol)) {
        verdict.outcome = Outcome::distinguished;
        verdict.witnesses.push_back(Witness<T>{pending[i], lv[i], rv[i], labels[i]});
      }
    }
    pending.clear();
    labels.clear();
  }

  IndistVerdict<T> finish() {
    flush();
    return std::move(verdict);
  }
};

template <Scalar T>
IndistVerdict<T> compare_tables(const std::vector<Signature<T>>& left, const std::vector<Signature<T>>& right, int q,
                                GridBudget budget, const IndistOptions& options) {
  std::vector<SlotInfo> slots;
  for (std::size_t i = 0; i < left.size(); ++i)
    slots.push_back(SlotInfo{left[i].arity(), is_symmetric(left[i], options.tol) && is_symmetric(right[i], options.tol)});
  Comparator<T> cmp{left, right, q, options};
  enumerate_shapes(slots, budget, BoundarySpec{}, [&](const GridShape& shape) {
    return cmp.push(realize(shape, left, q));
  });
  return cmp.finish();
}

}  // namespace detail

template <Scalar T>
IndistVerdict<T> holant_indist(const SimilarPair<T>& pair, GridBudget budget = {}, const IndistOptions& options = {}) {
  return detail::compare_tables(pair.left(), pair.aligned_right(), pair.domain(), std::move(budget), options);
}

// Grids are bipartite between the signatures of pl and those of pr.
template <Scalar T>
IndistVerdict<T> bipartite_indist(const SimilarPair<T>& pl, const SimilarPair<T>& pr, GridBudget budget = {},
                                  const IndistOptions& options = {}) {
  require(pl.domain() == pr.domain() || pl.size() == 0 || pr.size() == 0, ErrorCode::domain_mismatch,
          "bipartite sides are over different domains");
  auto left = pl.left();
  auto right = pl.aligned_right();
  std::vector<int> lside, rside;
  for (std::size_t i = 0; i < pl.size(); ++i) lside.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < pr.size(); ++i) {
    rside.push_back(static_cast<int>(left.size()));
    left.push_back(pr.left()[i]);
    right.push_back(pr.partner(i));
  }
  budget.bipartite = std::make_pair(lside, rside);
  const int q = pl.size() ? pl.domain() : pr.domain();
  return detail::compare_tables(left, right, q, std::move(budget), options);
}

// ---- trace words ----

struct Letter {
  int index = 0;
  bool transposed = false;
};

inline std::string word_label(const std::vector<Letter>& word) {
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += ' ';
    s += 'A' + std::to_string(l.index) + (l.transposed ? "^T" : "");
  }
  return s;
}

namespace detail {

template <Scalar T>
void require_binary(const std::vector<Signature<T>>& set) {
  for (const auto& f : set)
    require(f.arity() == 2, ErrorCode::arity_mismatch,
            "trace words need binary signatures, got arity " + std::to_string(f.arity()));
}

template <Scalar T>
Matrix<T> letter_matrix(const Letter& l, const std::vector<Signature<T>>& set) {
  require(l.index >= 0 && static_cast<std::size_t>(l.index) < set.size(), ErrorCode::invalid_argument,
          "word letter out of range");
  auto m = flatten(set[static_cast<std::size_t>(l.index)], 1, 1).matrix;
  return l.transposed ? transpose(m) : m;
}

template <Scalar T>
Matrix<T> word_product(const std::vector<Letter>& word, const std::vector<Signature<T>>& set) {
  require(!word.empty(), ErrorCode::invalid_argument, "word must be nonempty");
  Matrix<T> acc = letter_matrix(word.front(), set);
  for (std::size_t i = 1; i < word.size(); ++i) acc = acc * letter_matrix(word[i], set);
  return acc;
}

// all words over the alphabet of (index, transposed) letters, lengths 1..max_len
inline std::vector<std::vector<Letter>> all_words(std::size_t alphabet, int max_len) {
  std::vector<std::vector<Letter>> out;
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < alphabet; ++i)
        for (bool t : {false, true}) {
          auto v = w;
          v.push_back(Letter{static_cast<int>(i), t});
          next.push_back(std::move(v));
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

template <Scalar T>
T trace_word(const std::vector<Letter>& word, const std::vector<Signature<T>>& set) {
  detail::require_binary(set);
  return trace(detail::word_product(word, set));
}

// 1ᵀ w 1
template <Scalar T>
T path_word(const std::vector<Letter>& word, const std::vector<Signature<T>>& set) {
  detail::require_binary(set);
  auto m = detail::word_product(word, set);
  T s(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
  return s;
}

// Cycle of binary vertices whose Holant value is the trace of the word.
template <Scalar T>
Gadget<T> cycle_grid(const std::vector<Letter>& word, const std::vector<Signature<T>>& set) {
  detail::require_binary(set);
  require(!word.empty(), ErrorCode::invalid_argument, "word must be nonempty");
  const int n = static_cast<int>(word.size());
  std::vector<Vertex> vs;
  for (int k = 0; k < n; ++k) {
    int a = k, b = (k + 1) % n;
    vs.push_back(Vertex{word[static_cast<std::size_t>(k)].index,
                        word[static_cast<std::size_t>(k)].transposed ? std::vector<int>{b, a} : std::vector<int>{a, b}});
  }
  return Gadget<T>(set.front().domain(), set, std::move(vs), {}, 0);
}

// Path of binary vertices capped by all-ones unaries; Holant value is 1ᵀ w 1.
template <Scalar T>
Gadget<T> path_grid(const std::vector<Letter>& word, const std::vector<Signature<T>>& set) {
  detail::require_binary(set);
  require(!word.empty(), ErrorCode::invalid_argument, "word must be nonempty");
  const int q = set.front().domain();
  auto table = set;
  const int ones = static_cast<int>(table.size());
  table.push_back(Signature<T>(q, 1, std::vector<T>(static_cast<std::size_t>(q), T(1))));
  const int n = static_cast<int>(word.size());
  std::vector<Vertex> vs{Vertex{ones, {0}}};
  for (int k = 0; k < n; ++k) {
    const auto& l = word[static_cast<std::size_t>(k)];
    vs.push_back(Vertex{l.index, l.transposed ? std::vector<int>{k + 1, k} : std::vector<int>{k, k + 1}});
  }
  vs.push_back(Vertex{ones, {n}});
  return Gadget<T>(q, std::move(table), std::move(vs), {}, 0);
}

namespace detail {

template <Scalar T>
IndistVerdict<T> word_indist(const SimilarPair<T>& pair, int max_len, bool paths, const IndistOptions& options) {
  const auto& left = pair.left();
  const auto right = pair.aligned_right();
  require_binary(left);
  require(max_len >= 1, ErrorCode::invalid_argument, "maximum word length must be positive");
  IndistVerdict<T> verdict;
  auto record = [&](T a, T b, Gadget<T> grid, std::string label) {
    ++verdict.grids_checked;
    if (!values_differ(a, b, options.tol)) return false;
    verdict.outcome = Outcome::distinguished;
    verdict.witnesses.push_back(Witness<T>{std::move(grid), std::move(a), std::move(b), std::move(label)});
    return static_cast<int>(verdict.witnesses.size()) >= std::max(1, options.max_witnesses);
  };
  if (left.empty()) return verdict;
  for (const auto& w : all_words(left.size(), max_len)) {
    if (record(trace_word(w, left), trace_word(w, right), cycle_grid(w, left), "tr " + word_label(w))) return verdict;
    if (paths && record(path_word(w, left), path_word(w, right), path_grid(w, left), "path " + word_label(w)))
      return verdict;
  }
  return verdict;
}

}  // namespace detail

template <Scalar T>
IndistVerdict<T> trace_indist(const SimilarPair<T>& pair, int max_len, const IndistOptions& options = {}) {
  return detail::word_indist(pair, max_len, false, options);
}

// ---- CSP variants ----

enum class CspVariant { all, even_degree, cycles, paths };

// all / even_degree: bipartite grids between the pair and equalities of the
// allowed arities up to half the degree budget. cycles / paths: trace words and
// capped path words up to max_vertices letters.
template <Scalar T>
IndistVerdict<T> csp_indist(const SimilarPair<T>& pair, GridBudget budget, CspVariant variant,
                            const IndistOptions& options = {}) {
  if (variant == CspVariant::cycles) return detail::word_indist(pair, budget.max_vertices, false, options);
  if (variant == CspVariant::paths) return detail::word_indist(pair, budget.max_vertices, true, options);
  const int q = pair.domain();
  std::vector<Signature<T>> eqs;
  for (int k = 1; k <= std::max(1, budget.max_total_degree / 2); ++k)
    if (variant == CspVariant::all || k % 2 == 0) eqs.push_back(standard::equality<T>(k, q));
  return bipartite_indist(pair, SimilarPair<T>(eqs, eqs), std::move(budget), options);
}

}  // namespace holant
