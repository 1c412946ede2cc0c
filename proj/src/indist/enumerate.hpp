#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gadget/gadget.hpp"

namespace holant {

// What enumeration needs to know about a signature: its arity, and whether its
// ports are interchangeable on both sides of the comparison.
struct SlotInfo {
  int arity = 0;
  bool symmetric = false;
};

struct GridBudget {
  int max_vertices = 5;
  int max_total_degree = 14;
  bool allow_vertexless_loops = false;
  // signature indices allowed on each side; edges only join opposite sides
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartite;
  bool connected_only = false;

  void validate() const;
};

// Dangling stubs for gadget enumeration. Distinct stubs are labeled positions;
// indistinct stubs are interchangeable (enough when only symmetry is tested).
struct BoundarySpec {
  int count = 0;
  bool distinct = true;
  bool allow_wires = true;
  // every vertex must be connected to some dangling stub
  bool require_contact = false;
};

// A grid or gadget skeleton; edge labels are dense, legs follow stub order.
struct GridShape {
  std::vector<int> vertex_signature;
  std::vector<std::vector<int>> ports;
  std::vector<int> legs;
  int loops = 0;
};

// Deterministic order: vertex count, then vertex multiset, then stub matching.
// Return false from visit to stop.
void enumerate_shapes(std::span<const SlotInfo> slots, const GridBudget& budget, const BoundarySpec& boundary,
                      const std::function<bool(const GridShape&)>& visit);

std::vector<GridShape> enumerate_grids(std::span<const SlotInfo> slots, const GridBudget& budget);

template <Scalar T>
std::vector<SlotInfo> slots_for(const std::vector<Signature<T>>& set, double tol = kDefaultTol);

template <Scalar T>
Gadget<T> realize(const GridShape& shape, const std::vector<Signature<T>>& table, int q, int left_count = 0) {
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < shape.vertex_signature.size(); ++v)
    vertices.push_back(Vertex{shape.vertex_signature[v], shape.ports[v]});
  return Gadget<T>(q, table, std::move(vertices), shape.legs, left_count, shape.loops);
}

}  // namespace holant
