#pragma once

#include <map>
#include <string>
#include <vector>

#include "tensor_core/signature.hpp"

namespace holant {

// ports[k] is the edge attached to input k of the vertex signature.
struct Vertex {
  int signature = 0;
  std::vector<int> ports;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Edges are integer labels; every label occurs exactly twice among all vertex ports
// and legs. Legs run counterclockwise: ℓ_0..ℓ_{m-1} then r_{d-1}..r_0. A label that
// occurs twice among the legs is a wire. Labels are renumbered densely in order of
// first occurrence, so equality is structural identity.
template <Scalar T>
class Gadget {
 public:
  Gadget(int q, std::vector<Signature<T>> table, std::vector<Vertex> vertices, std::vector<int> legs, int left_count,
         int loops = 0)
      : q_(q),
        table_(std::move(table)),
        vertices_(std::move(vertices)),
        legs_(std::move(legs)),
        left_count_(left_count),
        loops_(loops) {
    normalize();
  }

  int domain() const { return q_; }
  const std::vector<Signature<T>>& table() const { return table_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<int>& legs() const { return legs_; }
  int m() const { return left_count_; }
  int d() const { return static_cast<int>(legs_.size()) - left_count_; }
  int loops() const { return loops_; }
  int edge_count() const { return edge_count_; }
  bool is_grid() const { return legs_.empty(); }

  int left_edge(int i) const { return legs_[static_cast<std::size_t>(i)]; }
  int right_edge(int j) const { return legs_[legs_.size() - 1 - static_cast<std::size_t>(j)]; }

  friend bool operator==(const Gadget&, const Gadget&) = default;

 private:
  void normalize() {
    require(q_ >= 1, ErrorCode::invalid_argument, "gadget domain size must be positive");
    require(left_count_ >= 0 && left_count_ <= static_cast<int>(legs_.size()), ErrorCode::invalid_argument,
            "left dangling count out of range");
    require(loops_ >= 0, ErrorCode::invalid_argument, "negative vertexless loop count");
    for (const auto& s : table_)
      require(s.domain() == q_, ErrorCode::domain_mismatch, "gadget signatures must share the gadget domain");
    std::map<int, int> relabel;
    std::map<int, int> uses;
    auto visit = [&](int& e) {
      auto [it, fresh] = relabel.try_emplace(e, static_cast<int>(relabel.size()));
      ++uses[e];
      e = it->second;
    };
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto& vx = vertices_[v];
      require(vx.signature >= 0 && vx.signature < static_cast<int>(table_.size()), ErrorCode::invalid_argument,
              "vertex " + std::to_string(v) + " references an unknown signature");
      require(static_cast<int>(vx.ports.size()) == table_[static_cast<std::size_t>(vx.signature)].arity(),
              ErrorCode::arity_mismatch,
              "vertex " + std::to_string(v) + " has " + std::to_string(vx.ports.size()) +
                  " ports but its signature has arity " +
                  std::to_string(table_[static_cast<std::size_t>(vx.signature)].arity()));
      for (auto& e : vx.ports) visit(e);
    }
    for (auto& e : legs_) visit(e);
    for (const auto& [e, n] : uses)
      require(n == 2, ErrorCode::invariant,
              "edge " + std::to_string(e) + " has " + std::to_string(n) + " endpoints instead of 2");
    edge_count_ = static_cast<int>(relabel.size());
  }

  int q_;
  std::vector<Signature<T>> table_;
  std::vector<Vertex> vertices_;
  std::vector<int> legs_;
  int left_count_;
  int loops_;
  int edge_count_ = 0;
};

template <Scalar To, Scalar From>
Gadget<To> convert(const Gadget<From>& k) {
  return Gadget<To>(k.domain(), convert<To>(k.table()), k.vertices(), k.legs(), k.m(), k.loops());
}

}  // namespace holant
