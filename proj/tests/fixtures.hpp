#pragma once

#include <random>
#include <vector>

#include "gk/generators.hpp"
#include "gk/graph.hpp"

namespace fixtures {

inline gk::Graph from_edges(std::size_t n, std::vector<gk::Edge> edges) { return gk::Graph(n, edges); }

inline gk::Graph path(std::size_t n) {
  gk::GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(static_cast<gk::Vertex>(i), static_cast<gk::Vertex>(i + 1));
  return b.build();
}

inline gk::Graph star(std::size_t leaves) {
  gk::GraphBuilder b(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) b.add_edge(0, static_cast<gk::Vertex>(i));
  return b.build();
}

inline gk::Graph complete_bipartite(std::size_t a, std::size_t b) {
  gk::GraphBuilder gb(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) gb.add_edge(static_cast<gk::Vertex>(i), static_cast<gk::Vertex>(a + j));
  return gb.build();
}

inline gk::Graph relabel(const gk::Graph& g, const std::vector<gk::Vertex>& perm) {
  std::vector<gk::Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return gk::Graph(g.order(), e);
}

inline std::vector<gk::Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<gk::Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<gk::Vertex>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// G(n, p) random graph.
inline gk::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  gk::GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(static_cast<gk::Vertex>(i), static_cast<gk::Vertex>(j));
  return b.build();
}

}  // namespace fixtures
