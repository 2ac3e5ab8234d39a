#include "gk/reduction.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace gk {
namespace {

using nlohmann::json;

std::string vstr(Vertex v) { return std::to_string(v); }

// Incident edge ids of v, ascending.
std::vector<std::size_t> incident(const GadgetMap& map, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < map.source_edges.size(); ++e)
    if (map.source_edges[e].first == v || map.source_edges[e].second == v) out.push_back(e);
  return out;
}

std::pair<Vertex, Vertex> x_and_y(const GadgetMap& map, std::size_t e) {
  auto [a, b] = map.source_edges[e];
  return map.in_x(a) ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::optional<Bipartition> bipartition_of(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(v)) {
        if (color[y] < 0) {
          color[y] = 1 - color[v];
          queue.push_back(y);
        } else if (color[y] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (std::size_t v = 0; v < g.order(); ++v) (color[v] == 0 ? b.x : b.y).push_back(static_cast<Vertex>(v));
  return b;
}

std::size_t GadgetMap::edge_id(Vertex a, Vertex b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(source_edges.begin(), source_edges.end(), e);
  if (it == source_edges.end() || *it != e) throw_input("{" + vstr(a) + "," + vstr(b) + "} is not a source edge");
  return static_cast<std::size_t>(it - source_edges.begin());
}

Graph graph_of_map(const GadgetMap& map) {
  GraphBuilder b(map.order);
  for (Vertex v = 0; v < static_cast<Vertex>(map.source_order); ++v) b.add_clique(map.block.at(v));
  for (std::size_t e = 0; e < map.source_edges.size(); ++e) {
    auto [x, y] = x_and_y(map, e);
    (void)y;
    for (Vertex u : map.block.at(x)) b.add_edge(map.w[e], u);
    for (Vertex v : map.wired.at(e)) b.add_edge(map.w[e], v);
  }
  return b.build();
}

Reduction reduce(const Graph& g, const Bipartition& parts) {
  const std::size_t n = g.order();
  if (n == 0) throw_precondition("reduction input is empty");
  if (!is_connected(g)) throw_precondition("reduction input is not connected");
  if (is_k_regular(g) != std::optional<std::size_t>{3}) throw_precondition("reduction input is not 3-regular");
  std::vector<int> side(n, -1);
  for (Vertex v : parts.x) side.at(g.check(v)) = 0;
  for (Vertex v : parts.y) {
    if (side.at(g.check(v)) == 0) throw_precondition("bipartition classes overlap at vertex " + vstr(v));
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) throw_precondition("bipartition does not cover every vertex");
  for (auto [a, b] : g.edges())
    if (side[a] == side[b]) throw_precondition("edge {" + vstr(a) + "," + vstr(b) + "} lies inside one class");
  if (!is_biconnected(g)) throw_precondition("reduction input is not 2-connected");

  GadgetMap map;
  map.source_order = n;
  map.source_edges = g.edges();
  map.parts.x = parts.x;
  map.parts.y = parts.y;
  std::sort(map.parts.x.begin(), map.parts.x.end());
  std::sort(map.parts.y.begin(), map.parts.y.end());
  map.block.assign(n, {});
  Vertex next = 0;
  for (Vertex x : map.parts.x)
    for (int i = 0; i < 4; ++i) map.block[x].push_back(next++);
  for (Vertex y : map.parts.y)
    for (int i = 0; i < 6; ++i) map.block[y].push_back(next++);
  map.w.resize(map.source_edges.size());
  for (auto& w : map.w) w = next++;
  map.order = static_cast<std::size_t>(next);
  map.wired.resize(map.source_edges.size());
  // Pair j of V_y serves the j-th incident edge of y.
  for (Vertex y : map.parts.y) {
    auto inc = incident(map, y);
    for (std::size_t j = 0; j < inc.size(); ++j) map.wired[inc[j]] = {map.block[y][2 * j], map.block[y][2 * j + 1]};
  }
  return {graph_of_map(map), std::move(map)};
}

Reduction reduce(const Graph& g) {
  auto parts = bipartition_of(g);
  if (!parts) throw_precondition("reduction input is not bipartite");
  return reduce(g, *parts);
}

Cycle forward_cycle(const Graph& g, const Cycle& c, const GadgetMap& map) {
  if (g.order() != map.source_order || !is_hamiltonian_cycle(g, c)) throw_input("input is not a Hamilton cycle of the source graph");
  std::vector<Vertex> seq = c.vertices;
  if (!map.in_x(seq[0])) std::rotate(seq.begin(), seq.begin() + 1, seq.end());
  const std::size_t m = seq.size();
  Cycle out;
  for (std::size_t t = 0; t < m; t += 2) {
    const Vertex x = seq[t], y = seq[t + 1];
    const Vertex before = seq[(t + m - 1) % m], after = seq[(t + 2) % m];
    const std::size_t d = map.edge_id(before, x), e = map.edge_id(x, y), f = map.edge_id(y, after);
    std::size_t b = 0;
    for (std::size_t id : incident(map, y))
      if (id != e && id != f) b = id;
    const auto& ux = map.block[x];
    out.vertices.push_back(map.w[d]);
    out.vertices.insert(out.vertices.end(), ux.begin(), ux.end());
    out.vertices.insert(out.vertices.end(), {map.w[e], map.wired[e][0], map.wired[e][1], map.wired[b][0], map.w[b],
                                             map.wired[b][1], map.wired[f][0], map.wired[f][1]});
  }
  return out;
}

bool crossed(std::size_t edge_id, const Cycle& reduced_cycle, const GadgetMap& map) {
  if (edge_id >= map.source_edges.size()) throw_input("edge id out of range");
  const auto& v = reduced_cycle.vertices;
  auto it = std::find(v.begin(), v.end(), map.w[edge_id]);
  if (it == v.end()) throw_input("cycle misses w vertex " + vstr(map.w[edge_id]));
  const std::size_t i = static_cast<std::size_t>(it - v.begin());
  const Vertex a = v[(i + v.size() - 1) % v.size()], b = v[(i + 1) % v.size()];
  auto [x, y] = x_and_y(map, edge_id);
  auto in = [&](Vertex s, Vertex q) {
    const auto& blk = map.block[s];
    return std::find(blk.begin(), blk.end(), q) != blk.end();
  };
  return (in(x, a) && in(y, b)) || (in(x, b) && in(y, a));
}

Cycle backward_cycle(const Cycle& reduced_cycle, const GadgetMap& map) {
  const Graph reduced = graph_of_map(map);
  if (!is_hamiltonian_cycle(reduced, reduced_cycle)) throw_input("input is not a Hamilton cycle of the reduced graph");
  const std::size_t n = map.source_order;
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t e = 0; e < map.source_edges.size(); ++e)
    if (crossed(e, reduced_cycle, map)) {
      auto [a, b] = map.source_edges[e];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() != 2)
      throw_contradiction("vertex " + vstr(static_cast<Vertex>(v)) + " has " + std::to_string(adj[v].size()) +
                          " crossed edges instead of 2");
  Cycle out;
  Vertex prev = -1, cur = 0;
  do {
    out.vertices.push_back(cur);
    Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  } while (cur != 0 && out.length() <= n);
  if (out.length() != n) throw_contradiction("crossed edges do not form a single spanning cycle");
  return out;
}

std::string map_to_json(const GadgetMap& map) {
  json j;
  j["source_order"] = map.source_order;
  j["order"] = map.order;
  j["source_edges"] = json::array();
  for (auto [a, b] : map.source_edges) j["source_edges"].push_back({a, b});
  j["x"] = map.parts.x;
  j["y"] = map.parts.y;
  j["blocks"] = map.block;
  j["w"] = map.w;
  j["wired"] = map.wired;
  return j.dump();
}

GadgetMap map_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed gadget map JSON");
  }
  GadgetMap map;
  try {
    map.source_order = j.at("source_order").get<std::size_t>();
    map.order = j.at("order").get<std::size_t>();
    for (const auto& e : j.at("source_edges")) map.source_edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    map.parts.x = j.at("x").get<VertexSet>();
    map.parts.y = j.at("y").get<VertexSet>();
    map.block = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    map.w = j.at("w").get<std::vector<Vertex>>();
    map.wired = j.at("wired").get<std::vector<std::array<Vertex, 2>>>();
  } catch (const json::exception& e) {
    throw_input(std::string("gadget map JSON has the wrong shape: ") + e.what());
  }
  if (map.block.size() != map.source_order || map.w.size() != map.source_edges.size() ||
      map.wired.size() != map.source_edges.size() || !std::is_sorted(map.source_edges.begin(), map.source_edges.end()) ||
      !std::is_sorted(map.parts.x.begin(), map.parts.x.end()))
    throw_input("gadget map JSON is inconsistent");
  graph_of_map(map);  // range checks
  return map;
}

}  // namespace gk
