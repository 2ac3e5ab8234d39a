#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

struct Bipartition {
  VertexSet x;
  VertexSet y;
};

// 2-coloring with vertex 0's class as X; nullopt if g is not bipartite.
std::optional<Bipartition> bipartition_of(const Graph& g);

// Bookkeeping for the cubic bipartite -> 6-regular construction.
// Id layout: the U blocks (4 ids each) in ascending X order, then the V blocks
// (6 ids each) in ascending Y order, then one w per source edge in edge order.
struct GadgetMap {
  std::size_t source_order = 0;
  std::vector<Edge> source_edges;           // sorted; the index is the edge id
  Bipartition parts;
  std::vector<std::vector<Vertex>> block;   // per source vertex: U_x or V_y
  std::vector<Vertex> w;                    // per edge id
  std::vector<std::array<Vertex, 2>> wired; // per edge id: the two ids of V_y joined to w_e
  std::size_t order = 0;

  std::size_t edge_id(Vertex a, Vertex b) const;  // throws input if ab is not a source edge
  bool in_x(Vertex v) const { return std::binary_search(parts.x.begin(), parts.x.end(), v); }
};

struct Reduction {
  Graph graph;
  GadgetMap map;
};

// g must be connected, 2-connected, 3-regular and bipartite with the given
// parts. Planarity is not required.
Reduction reduce(const Graph& g, const Bipartition& parts);
Reduction reduce(const Graph& g);

// Rebuilds the reduced graph from the map alone.
Graph graph_of_map(const GadgetMap& map);

Cycle forward_cycle(const Graph& g, const Cycle& c, const GadgetMap& map);

// Whether w_e's two cycle neighbors lie in U_x and V_y respectively.
bool crossed(std::size_t edge_id, const Cycle& reduced_cycle, const GadgetMap& map);

Cycle backward_cycle(const Cycle& reduced_cycle, const GadgetMap& map);

std::string map_to_json(const GadgetMap& map);
GadgetMap map_from_json(std::string_view text);

}  // namespace gk
