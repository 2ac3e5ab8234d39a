#include "gk/membership.hpp"

#include <algorithm>
#include <limits>

namespace gk {
namespace {

// Vertices within distance 2 of u, sorted.
VertexSet ball2_members(const Graph& g, Vertex u) {
  VertexSet out{u};
  for (Vertex x : g.neighbors(u)) {
    out.push_back(x);
    for (Vertex y : g.neighbors(x)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> second_neighborhood_sizes(const Graph& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    out[u] = ball2_members(g, static_cast<Vertex>(u)).size() - 1 - g.degree(static_cast<Vertex>(u));
  return out;
}

std::optional<BallCutWitness> find_ball2_cut_vertex(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    auto members = ball2_members(g, static_cast<Vertex>(u));
    auto cuts = cut_vertices(induced_subgraph(g, members));
    if (!cuts.empty()) return BallCutWitness{static_cast<Vertex>(u), members[cuts.front()]};
  }
  return std::nullopt;
}

MembershipReport classify(const Graph& g) {
  MembershipReport r;
  if (g.order() == 0) {
    r.reason = "empty graph";
    return r;
  }
  r.connected = is_connected(g);
  r.k = is_k_regular(g);
  r.second_neighborhood = second_neighborhood_sizes(g);
  if (r.k) {
    for (std::size_t u = 0; u < g.order(); ++u)
      if (r.second_neighborhood[u] > *r.k) {
        r.violating_vertex = static_cast<Vertex>(u);
        break;
      }
  }
  if (!r.connected) {
    r.reason = "graph is disconnected";
  } else if (!r.k) {
    r.reason = "graph is not regular";
  } else if (*r.k < 2) {
    r.reason = "degree below 2";
  } else if (r.violating_vertex) {
    r.reason = "vertex " + std::to_string(*r.violating_vertex) + " has " +
               std::to_string(r.second_neighborhood[*r.violating_vertex]) + " vertices at distance 2 (k=" +
               std::to_string(*r.k) + ")";
  } else {
    r.member = true;
    r.ball_cut = find_ball2_cut_vertex(g);
  }
  return r;
}

MembershipPredicates membership_predicates(const Graph& g, std::size_t k) {
  if (!is_connected(g)) throw_precondition("membership predicates require a connected graph");
  if (is_k_regular(g) != k) throw_precondition("membership predicates require a " + std::to_string(k) + "-regular graph");

  MembershipPredicates p;
  const std::size_t n = g.order();
  std::vector<VertexSet> m2(n);
  for (std::size_t u = 0; u < n; ++u) m2[u] = ball2_members(g, static_cast<Vertex>(u));

  p.second_neighborhood_bound = std::all_of(m2.begin(), m2.end(), [&](const VertexSet& m) {
    return m.size() - 1 - k <= k;
  });
  // 2k >= |M_2(u)| - 1 in integers.
  p.ball_size_bound = std::all_of(m2.begin(), m2.end(), [&](const VertexSet& m) { return 2 * k + 1 >= m.size(); });

  p.degree_sum_bound = true;
  p.common_neighbor_bound = true;
  std::vector<int> mark(n, 0);
  int stamp = 0;
  for (std::size_t w = 0; w < n; ++w) {
    const auto& nb = g.neighbors(static_cast<Vertex>(w));
    const long long ball = static_cast<long long>(m2[w].size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex u = nb[i], v = nb[j];
        if (g.has_edge(u, v)) continue;
        const long long du = static_cast<long long>(g.degree(u));
        const long long dv = static_cast<long long>(g.degree(v));
        if (du + dv < ball - 1) p.degree_sum_bound = false;

        ++stamp;
        long long shared = 0;
        for (Vertex x : g.neighbors(u)) mark[x] = stamp;
        for (Vertex x : g.neighbors(v)) {
          if (mark[x] == stamp) ++shared;
          mark[x] = stamp;
        }
        long long outside = 0;
        for (Vertex x : m2[w])
          if (mark[x] != stamp) ++outside;
        if (shared < outside - 1) p.common_neighbor_bound = false;
      }
    }
  }
  return p;
}

bool is_own_ball_cut_vertex(const Graph& g, Vertex v) {
  auto members = ball2_members(g, v);
  auto local = static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  auto cuts = cut_vertices(induced_subgraph(g, members));
  return std::binary_search(cuts.begin(), cuts.end(), local);
}

std::optional<CutVertexProfile> cut_vertex_profile(const Graph& g, Vertex v) {
  g.check(v);
  auto report = classify(g);
  if (!report.member) throw Error(ErrorKind::not_member, "cut vertex profile requires a member graph: " + report.reason);
  const std::size_t k = *report.k;

  // Search every radius-2 ball that contains v, then compare with v's own ball.
  bool cut_somewhere = false;
  for (std::size_t u = 0; u < g.order() && !cut_somewhere; ++u) {
    auto members = ball2_members(g, static_cast<Vertex>(u));
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) continue;
    auto cuts = cut_vertices(induced_subgraph(g, members));
    cut_somewhere = std::binary_search(cuts.begin(), cuts.end(), static_cast<Vertex>(it - members.begin()));
  }
  const bool own = is_own_ball_cut_vertex(g, v);
  if (cut_somewhere != own)
    throw_contradiction("vertex " + std::to_string(v) + " cuts some radius-2 ball but not its own");
  if (!own) return std::nullopt;

  auto members = ball2_members(g, v);
  members.erase(std::find(members.begin(), members.end(), v));
  auto comps = components(induced_subgraph(g, members));
  if (comps.size() != 2 || comps[0].size() != k || comps[1].size() != k)
    throw_contradiction("ball around cut vertex " + std::to_string(v) + " does not split into two parts of size k");

  CutVertexProfile profile;
  profile.v = v;
  std::vector<VertexSet> parts(2);
  for (int c = 0; c < 2; ++c)
    for (Vertex local : comps[c]) parts[c].push_back(members[local]);
  const Vertex lowest = g.neighbors(v).front();
  if (!std::binary_search(parts[0].begin(), parts[0].end(), lowest)) std::swap(parts[0], parts[1]);
  profile.first = parts[0];
  profile.second = parts[1];

  std::size_t in_first = 0;
  for (Vertex x : g.neighbors(v)) {
    const auto& part = std::binary_search(parts[0].begin(), parts[0].end(), x) ? parts[0] : parts[1];
    if (&part == &parts[0]) ++in_first;
    for (Vertex y : part)
      if (y != x && !g.has_edge(x, y))
        throw_contradiction("neighbor " + std::to_string(x) + " of cut vertex " + std::to_string(v) +
                            " is not complete to its part");
  }
  profile.neighbor_split = {in_first, k - in_first};
  return profile;
}

std::size_t min_edge_triangles(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool any = false;
  for (auto [u, v] : g.edges()) {
    best = std::min(best, common_neighbors(g, u, v));
    any = true;
  }
  return any ? best : 0;
}

bool triangle_density_implies_membership(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return false;
  auto k = is_k_regular(g);
  if (!k || *k < 9) return false;
  return min_edge_triangles(g) + 4 >= *k;
}

}  // namespace gk
