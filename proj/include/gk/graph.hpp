#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gk/error.hpp"

namespace gk {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always sorted ascending, no duplicates

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Throws ErrorKind::input on loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adj_.at(check(v)).size(); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(check(v)); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  Vertex check(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

// Collects edges before building; duplicate insertions are rejected at build().
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void add_clique(std::span<const Vertex> vs);
  void add_biclique(std::span<const Vertex> a, std::span<const Vertex> b);
  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// An ordered vertex sequence read cyclically. Validity is relative to a host
// graph; see is_cycle_of().
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct BallView {
  Vertex center = 0;
  std::size_t radius = 0;
  VertexSet members;  // local id i of `induced` is members[i]
  Graph induced;
};

// nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
// BFS distances from u; nullopt entries are unreachable.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex u);

VertexSet ring(const Graph& g, Vertex u, std::size_t r);
BallView ball(const Graph& g, Vertex u, std::size_t r);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

std::optional<std::size_t> is_k_regular(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
VertexSet cut_vertices(const Graph& g);
// Connected, at least three vertices, no cut vertex.
bool is_biconnected(const Graph& g);

struct LocalConnectivity {
  bool connected = true;
  std::optional<Vertex> witness;  // a vertex whose neighborhood is disconnected
};
LocalConnectivity is_locally_connected(const Graph& g);

struct ClawFreeness {
  bool claw_free = true;
  std::optional<std::array<Vertex, 4>> claw;  // center first
};
ClawFreeness is_claw_free(const Graph& g);

// Precondition: g connected.
std::size_t diameter(const Graph& g);

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v);

bool is_cycle_of(const Graph& g, const Cycle& c);
bool is_hamiltonian_cycle(const Graph& g, const Cycle& c);
// Edge set of a cycle, normalized (u < v) and sorted.
std::vector<Edge> cycle_edges(const Cycle& c);

}  // namespace gk
