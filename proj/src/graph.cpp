#include "gk/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gk {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw_input("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                  std::to_string(n));
    if (u == v) throw_input("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw_input("duplicate edge at vertex " + std::to_string(v));
    edge_count_ += a.size();
  }
  edge_count_ /= 2;
}

Vertex Graph::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adj_.size())
    throw_input("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(adj_.size()));
  return v;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_.at(check(u));
  check(v);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

void GraphBuilder::add_clique(std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

void GraphBuilder::add_biclique(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex u : a)
    for (Vertex v : b) add_edge(u, v);
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex u) {
  g.check(u);
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::queue<Vertex> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y]) continue;
      dist[y] = *dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  return distances_from(g, u)[v];
}

VertexSet ring(const Graph& g, Vertex u, std::size_t r) {
  auto dist = distances_from(g, u);
  VertexSet out;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (dist[v] && *dist[v] == r) out.push_back(static_cast<Vertex>(v));
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex y : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), y);
      if (it == vertices.end() || *it != y) continue;
      auto j = static_cast<std::size_t>(it - vertices.begin());
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(vertices.size(), edges);
}

BallView ball(const Graph& g, Vertex u, std::size_t r) {
  if (r < 1) throw_precondition("ball radius must be at least 1");
  auto dist = distances_from(g, u);
  BallView view;
  view.center = u;
  view.radius = r;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (dist[v] && *dist[v] <= r) view.members.push_back(static_cast<Vertex>(v));
  view.induced = induced_subgraph(g, view.members);
  return view;
}

std::optional<std::size_t> is_k_regular(const Graph& g) {
  if (g.order() == 0) throw_precondition("regularity of the empty graph is undefined");
  std::size_t k = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) != k) return std::nullopt;
  return k;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    VertexSet members;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] >= 0) continue;
        comp[y] = static_cast<int>(out.size());
        stack.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() == 0 || components(g).size() == 1; }

VertexSet cut_vertices(const Graph& g) {
  // Iterative Hopcroft-Tarjan low-link.
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(root)};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Vertex x = stack.back();
      const auto& nb = g.neighbors(x);
      if (next_child[x] < nb.size()) {
        Vertex y = nb[next_child[x]++];
        if (disc[y] < 0) {
          parent[y] = x;
          disc[y] = low[y] = timer++;
          if (x == static_cast<Vertex>(root)) ++root_children;
          stack.push_back(y);
        } else if (y != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      if (Vertex p = parent[x]; p >= 0) {
        low[p] = std::min(low[p], low[x]);
        if (p != static_cast<Vertex>(root) && low[x] >= disc[p]) is_cut[p] = true;
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool is_biconnected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

LocalConnectivity is_locally_connected(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(static_cast<Vertex>(u));
    if (!is_connected(induced_subgraph(g, nb))) return {false, static_cast<Vertex>(u)};
  }
  return {};
}

ClawFreeness is_claw_free(const Graph& g) {
  for (std::size_t c = 0; c < g.order(); ++c) {
    const auto& nb = g.neighbors(static_cast<Vertex>(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          return {false, std::array<Vertex, 4>{static_cast<Vertex>(c), nb[i], nb[j], nb[l]}};
        }
      }
  }
  return {};
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (const auto& d : distances_from(g, static_cast<Vertex>(u))) {
      if (!d) throw_precondition("diameter requires a connected graph");
      best = std::max(best, *d);
    }
  }
  return best;
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t count = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex v = vs[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (!g.has_edge(v, vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, const Cycle& c) {
  return c.length() == g.order() && is_cycle_of(g, c);
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  const auto& vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gk
