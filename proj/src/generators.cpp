#include "gk/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "gk/membership.hpp"

namespace gk {
namespace {

VertexSet id_range(std::size_t first, std::size_t count) {
  VertexSet out(count);
  std::iota(out.begin(), out.end(), static_cast<Vertex>(first));
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw_input(what);
}

// Deterministic across standard libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw_input("expected a nonnegative integer, got '" + s + "'");
  }
  if (pos != s.size() || (!s.empty() && s[0] == '-')) throw_input("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

const VertexSet& Layout::at(std::string_view name) const {
  for (const auto& [n, ids] : sets)
    if (n == name) return ids;
  throw_input("layout has no set named '" + std::string(name) + "'");
}

GeneratedGraph gen_G(std::size_t k, std::size_t n) {
  require(k >= 3 && n >= 2, "G(k,n) requires k >= 3 and n >= 2");
  GraphBuilder b(n * (k + 1));
  GeneratedGraph out;
  out.layout.add("V0", id_range(0, n));
  std::vector<VertexSet> blocks(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    blocks[i] = id_range(n + (i - 1) * k, k);
    b.add_clique(blocks[i]);
    out.layout.add("V" + std::to_string(i), blocks[i]);
  }
  const std::size_t first = k / 2, last = k - k / 2;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v = static_cast<Vertex>(i - 1);
    const auto& prev = blocks[i == 1 ? n : i - 1];
    for (std::size_t j = 0; j < first; ++j) b.add_edge(v, blocks[i][j]);
    for (std::size_t j = k - last; j < k; ++j) b.add_edge(v, prev[j]);
  }
  out.graph = b.build();
  return out;
}

GeneratedGraph gen_H(std::size_t k, std::size_t n) {
  require(k >= 3 && n >= 2, "H(k,n) requires k >= 3 and n >= 2");
  GraphBuilder b(n * (k + 1));
  GeneratedGraph out;
  out.layout.add("u", id_range(0, n));
  out.layout.add("v", id_range(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    auto w = id_range(2 * n + i * (k - 1), k - 1);
    b.add_clique(w);
    const auto u = static_cast<Vertex>(i), v = static_cast<Vertex>(n + i);
    for (Vertex x : w) {
      b.add_edge(u, x);
      b.add_edge(v, x);
    }
    b.add_edge(u, static_cast<Vertex>(n + (i + 1) % n));
    out.layout.add("W" + std::to_string(i + 1), std::move(w));
  }
  out.graph = b.build();
  return out;
}

GeneratedGraph gen_T(PartTag tag) {
  const std::size_t m = part_slot_count(tag);
  auto edges = part_edges(tag);
  GeneratedGraph out;
  out.graph = Graph(m + 2, edges);
  out.layout.add("a", {0});
  out.layout.add("slots", id_range(1, m));
  out.layout.add("b", {static_cast<Vertex>(m + 1)});
  return out;
}

GeneratedGraph gen_F4(const std::vector<PartTag>& sequence) {
  const std::size_t n = sequence.size();
  require(n >= 2, "F4 sequences need at least two parts");
  std::size_t total = n;
  for (PartTag t : sequence) total += part_slot_count(t);
  GraphBuilder b(total);
  GeneratedGraph out;
  out.layout.add("hinges", id_range(0, n));
  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = part_slot_count(sequence[i]);
    std::vector<Vertex> local(m + 2);
    local[0] = static_cast<Vertex>(i);
    for (std::size_t s = 0; s < m; ++s) local[s + 1] = static_cast<Vertex>(next + s);
    local[m + 1] = static_cast<Vertex>((i + 1) % n);
    for (auto [x, y] : part_edges(sequence[i])) b.add_edge(local[x], local[y]);
    out.layout.add("segment" + std::to_string(i + 1), id_range(next, m));
    next += m;
  }
  out.graph = b.build();
  return out;
}

QuotientCheck verify_quotient_certificate(const Graph& g, const QuotientCertificate& cert) {
  auto fail = [](std::string why) { return QuotientCheck{false, std::move(why)}; };
  const std::size_t nb = cert.blocks.size();
  std::vector<int> block_of(g.order(), -1);
  for (std::size_t i = 0; i < nb; ++i)
    for (Vertex v : cert.blocks[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.order()) return fail("block vertex out of range");
      if (block_of[v] >= 0) return fail("blocks overlap at vertex " + std::to_string(v));
      block_of[v] = static_cast<int>(i);
    }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return fail("blocks do not cover V");

  std::set<Edge> qedges;
  for (auto [u, v] : g.edges())
    if (block_of[u] != block_of[v])
      qedges.emplace(std::min(block_of[u], block_of[v]), std::max(block_of[u], block_of[v]));
  std::vector<Edge> qe(qedges.begin(), qedges.end());
  if (!(Graph(nb, qe) == cert.quotient)) return fail("quotient does not match the block partition");

  for (std::size_t a : cert.hubs)
    for (std::size_t b : cert.hubs)
      if (a != b && cert.quotient.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
        return fail("hubs are adjacent");
  if (cert.hubs.size() + cert.transits.size() != nb) return fail("every block must be a hub or a transit");
  if (cert.transits.size() % 2 == 0) return fail("an even number of transits does not certify anything");

  std::optional<std::pair<int, int>> hub_pair;
  for (std::size_t t : cert.transits) {
    std::vector<std::pair<Vertex, std::set<int>>> boundary;
    for (Vertex v : cert.blocks[t]) {
      std::set<int> outside;
      for (Vertex y : g.neighbors(v))
        if (block_of[y] != static_cast<int>(t)) outside.insert(block_of[y]);
      if (!outside.empty()) boundary.emplace_back(v, std::move(outside));
    }
    if (boundary.size() != 2) return fail(cert.names[t] + " does not have exactly two boundary vertices");
    if (cert.blocks[t].size() <= 2) return fail(cert.names[t] + " has no interior vertex");
    if (boundary[0].second.size() != 1 || boundary[1].second.size() != 1)
      return fail(cert.names[t] + " has a boundary vertex facing two blocks");
    int h1 = *boundary[0].second.begin(), h2 = *boundary[1].second.begin();
    if (h1 == h2) return fail(cert.names[t] + " faces a single block");
    auto is_hub = [&](int b) {
      return std::find(cert.hubs.begin(), cert.hubs.end(), static_cast<std::size_t>(b)) != cert.hubs.end();
    };
    if (!is_hub(h1) || !is_hub(h2)) return fail(cert.names[t] + " attaches to a non-hub");
    auto pair = std::make_pair(std::min(h1, h2), std::max(h1, h2));
    if (hub_pair && *hub_pair != pair) return fail("transits join different hub pairs");
    hub_pair = pair;
  }
  return {true, {}};
}

Counterexample gen_counterexample(std::size_t k, std::size_t k1, std::size_t k2, std::size_t k3) {
  require(k1 >= 2 && k2 >= 2 && k3 >= 2, "counterexample requires k_i >= 2");
  require(k1 + k2 + k3 == k, "counterexample requires k_1 + k_2 + k_3 = k");
  const std::array<std::size_t, 3> ks{k1, k2, k3};
  const std::size_t n = 8 * k + 6;
  GraphBuilder b(n);
  Counterexample out;
  auto& layout = out.generated.layout;

  auto hub = id_range(0, k);
  auto hub2 = id_range(n - k, k);
  b.add_clique(hub);
  b.add_clique(hub2);
  layout.add("Ht", hub);

  std::size_t next = k, hub_offset = 0;
  std::vector<VertexSet> transit_blocks;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t ki = ks[i];
    auto U = id_range(next, k - ki);
    auto V = id_range(next + (k - ki), ki);
    auto Vp = id_range(next + k, ki);
    auto Up = id_range(next + k + ki, k - ki);
    const auto w = static_cast<Vertex>(next + 2 * k);
    const auto wp = static_cast<Vertex>(next + 2 * k + 1);
    for (const auto* s : {&U, &V, &Vp, &Up}) b.add_clique(*s);
    b.add_biclique(U, V);
    b.add_biclique(Up, Vp);
    for (Vertex x : U) b.add_edge(x, w);
    for (Vertex x : Up) b.add_edge(x, wp);
    for (std::size_t j = 0; j < ki; ++j) b.add_edge(V[j], Vp[j]);
    for (std::size_t j = 0; j < ki; ++j) {
      b.add_edge(w, hub[hub_offset + j]);
      b.add_edge(wp, hub2[hub_offset + j]);
    }
    hub_offset += ki;

    const std::string idx = std::to_string(i + 1);
    layout.add("U" + idx, U);
    layout.add("V" + idx, V);
    layout.add("V" + idx + "'", Vp);
    layout.add("U" + idx + "'", Up);
    layout.add("w" + idx, {w});
    layout.add("w" + idx + "'", {wp});
    transit_blocks.push_back(id_range(next, 2 * k + 2));
    next += 2 * k + 2;
  }
  layout.add("Ht'", hub2);
  out.generated.graph = b.build();

  auto& cert = out.certificate;
  cert.names = {"Ht", "H1", "H2", "H3", "Ht'"};
  cert.blocks = {hub, transit_blocks[0], transit_blocks[1], transit_blocks[2], hub2};
  cert.hubs = {0, 4};
  cert.transits = {1, 2, 3};
  std::vector<Edge> qe{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  cert.quotient = Graph(5, qe);
  cert.reason =
      "each H_i meets the rest of the graph only through w_i (towards Ht) and w_i' (towards Ht'), so a Hamilton "
      "cycle crosses each H_i exactly once from Ht to Ht'; three such crossings cannot close a cycle, and the "
      "quotient K_{2,3} is not Hamiltonian";
  return out;
}

std::vector<Edge> round_robin_color_class(std::size_t p, std::size_t color) {
  const std::size_t m = 2 * p - 1;  // vertices 0..m-1 on the circle, m is the center
  std::vector<Edge> out;
  out.emplace_back(static_cast<Vertex>(color), static_cast<Vertex>(m));
  for (std::size_t s = 1; s < p; ++s) {
    auto a = static_cast<Vertex>((color + s) % m);
    auto b = static_cast<Vertex>((color + m - s) % m);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

GeneratedGraph gen_D(std::size_t n, std::size_t p, std::size_t t, bool extended) {
  require(n >= 2, "D(n,p,t) requires n >= 2");
  if (extended)
    require(p >= 2 && t <= 4 && t + 2 <= p, "extended D(n,p,t) requires p >= 2 and t <= min(4, p-2)");
  else
    require(p >= 6 && t <= 4, "D(n,p,t) requires p >= 6 and 0 <= t <= 4");
  const std::size_t blocks = 2 * n, size = 2 * p;
  std::set<Edge> removed;
  for (std::size_t c = 0; c + 1 + t < p; ++c)
    for (auto e : round_robin_color_class(p, c)) removed.insert(e);

  GraphBuilder b(blocks * size);
  GeneratedGraph out;
  for (std::size_t i = 0; i < blocks; ++i) {
    auto block = id_range(i * size, size);
    auto following = id_range(((i + 1) % blocks) * size, size);
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = x + 1; y < size; ++y)
        if (!removed.count({static_cast<Vertex>(x), static_cast<Vertex>(y)})) b.add_edge(block[x], block[y]);
    b.add_biclique(block, following);
    out.layout.add("V" + std::to_string(i + 1), std::move(block));
  }
  out.graph = b.build();
  return out;
}

GeneratedGraph gen_Q(std::size_t n, std::size_t p) {
  require(n >= 2 && p >= 2, "Q(n,p) requires n >= 2 and p >= 2");
  std::vector<std::size_t> sizes{2 * n, 2 * n, 2};
  for (std::size_t i = 1; i < p; ++i) sizes.insert(sizes.end(), {2 * n, 2 * n - 1, 2});
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<VertexSet> blocks;
  std::size_t next = 0;
  GeneratedGraph out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    blocks.push_back(id_range(next, sizes[i]));
    out.layout.add("V" + std::to_string(i + 1), blocks.back());
    next += sizes[i];
  }
  GraphBuilder b(total);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    for (std::size_t x = 0; x < block.size(); ++x)
      for (std::size_t y = x + 1; y < block.size(); ++y) {
        // Matching {0,1},{2,3},... removed from the first three blocks.
        if (i < 3 && x % 2 == 0 && y == x + 1) continue;
        b.add_edge(block[x], block[y]);
      }
    b.add_biclique(block, blocks[(i + 1) % blocks.size()]);
  }
  out.graph = b.build();
  return out;
}

GeneratedGraph gen_bipartite_minus_matching(std::size_t k) {
  require(k >= 3, "bipartite-minus-matching requires k >= 3");
  GraphBuilder b(2 * (k + 1));
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      if (i != j) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(k + 1 + j));
  GeneratedGraph out;
  out.graph = b.build();
  out.layout.add("A", id_range(0, k + 1));
  out.layout.add("B", id_range(k + 1, k + 1));
  return out;
}

GeneratedGraph gen_multipartite(std::size_t d, std::size_t r) {
  require(d >= 3 && r >= 2, "multipartite requires d >= 3 and r >= 2");
  GraphBuilder b(d * r);
  GeneratedGraph out;
  std::vector<VertexSet> parts;
  for (std::size_t i = 0; i < r; ++i) {
    parts.push_back(id_range(i * d, d));
    out.layout.add("V" + std::to_string(i + 1), parts.back());
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) b.add_biclique(parts[i], parts[j]);
  out.graph = b.build();
  return out;
}

GeneratedGraph gen_kk_rewire(std::size_t k, std::size_t t, std::uint64_t seed) {
  require(k >= 4 && t >= 1 && 2 * t < k, "kk-rewire requires k >= 4 and 1 <= t < k/2");
  std::mt19937_64 rng(seed);
  auto left = id_range(0, k), right = id_range(k, k);
  seeded_shuffle(left, rng);
  seeded_shuffle(right, rng);
  std::set<Edge> removed;
  for (std::size_t i = 0; i < 2 * t; ++i) removed.emplace(left[i], right[i]);
  GraphBuilder b(2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < 2 * k; ++j)
      if (!removed.count({static_cast<Vertex>(i), static_cast<Vertex>(j)}))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  for (std::size_t i = 0; i < 2 * t; i += 2) {
    b.add_edge(left[i], left[i + 1]);
    b.add_edge(right[i], right[i + 1]);
  }
  GeneratedGraph out;
  out.graph = b.build();
  out.layout.add("V1", id_range(0, k));
  out.layout.add("V2", id_range(k, k));
  VertexSet xs(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(2 * t));
  VertexSet ys(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(2 * t));
  out.layout.add("x", xs);
  out.layout.add("y", ys);
  return out;
}

Graph random_regular(std::size_t k, std::size_t n, std::uint64_t seed) {
  require(n > k && (n * k) % 2 == 0, "random regular graph requires n > k and nk even");
  std::mt19937_64 rng(seed);
  const std::size_t points = n * k;
  std::vector<std::uint32_t> pts(points);
  for (;;) {
    for (std::size_t i = 0; i < points; ++i) pts[i] = static_cast<std::uint32_t>(i / k);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t remaining = points; remaining > 0 && ok; remaining -= 2) {
      std::size_t a = uniform_below(rng, remaining);
      std::swap(pts[a], pts[remaining - 1]);
      std::size_t c = uniform_below(rng, remaining - 1);
      std::swap(pts[c], pts[remaining - 2]);
      auto u = static_cast<Vertex>(pts[remaining - 1]), v = static_cast<Vertex>(pts[remaining - 2]);
      if (u == v || !edges.emplace(std::min(u, v), std::max(u, v)).second) ok = false;
    }
    if (ok) {
      std::vector<Edge> e(edges.begin(), edges.end());
      return Graph(n, e);
    }
  }
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  b.add_clique(id_range(0, n));
  return b.build();
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return b.build();
}

Graph cycle_square(std::size_t n) {
  require(n >= 5, "square of a cycle requires n >= 5");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 2) % n));
  }
  return b.build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph cube_graph() {
  GraphBuilder b(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) b.add_edge(v, v ^ bit);
  return b.build();
}

std::size_t vertex_connectivity(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (!is_connected(g)) return 0;
  // Try every separator of size s < cap.
  std::vector<Vertex> chosen;
  std::function<bool(std::size_t, std::size_t)> separates = [&](std::size_t start, std::size_t s) -> bool {
    if (chosen.size() == s) {
      VertexSet rest;
      for (std::size_t v = 0; v < n; ++v)
        if (std::find(chosen.begin(), chosen.end(), static_cast<Vertex>(v)) == chosen.end())
          rest.push_back(static_cast<Vertex>(v));
      return rest.size() >= 2 && !is_connected(induced_subgraph(g, rest));
    }
    for (std::size_t v = start; v < n; ++v) {
      chosen.push_back(static_cast<Vertex>(v));
      bool hit = separates(v + 1, s);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  };
  for (std::size_t s = 1; s < cap && s + 1 < n; ++s)
    if (separates(0, s)) return s;
  return std::min(cap, n - 1);
}

ValidationReport validate_family(const Graph& g, const FamilyClaims& expected) {
  ValidationReport r;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    r.checked.push_back(name);
    if (!ok) r.failures.push_back(name + ": " + detail);
  };
  auto str = [](std::size_t v) { return std::to_string(v); };
  const bool connected = is_connected(g);

  if (expected.order) check("order", g.order() == *expected.order, "expected " + str(*expected.order) + ", got " + str(g.order()));
  if (expected.degree) {
    auto k = g.order() ? is_k_regular(g) : std::nullopt;
    check("regularity", k == expected.degree, "expected " + str(*expected.degree) + "-regular");
  }
  if (expected.member) {
    auto rep = classify(g);
    check("membership", rep.member == *expected.member, rep.member ? "graph is a member" : rep.reason);
  }
  if (expected.diameter || expected.diameter_range) {
    if (!connected) {
      check("diameter", false, "graph is disconnected");
    } else {
      const std::size_t d = diameter(g);
      if (expected.diameter) check("diameter", d == *expected.diameter, "expected " + str(*expected.diameter) + ", got " + str(d));
      if (expected.diameter_range) {
        auto [lo, hi] = *expected.diameter_range;
        check("diameter range", lo <= d && d <= hi, "expected [" + str(lo) + "," + str(hi) + "], got " + str(d));
      }
    }
  }
  if (expected.connectivity) {
    auto c = vertex_connectivity(g, *expected.connectivity + 1);
    check("connectivity", c == *expected.connectivity, "expected " + str(*expected.connectivity) + ", got " + str(c));
  }
  if (expected.locally_connected) {
    auto lc = is_locally_connected(g);
    check("local connectivity", lc.connected == *expected.locally_connected,
          lc.connected ? "graph is locally connected" : "neighborhood of " + str(static_cast<std::size_t>(*lc.witness)) + " is disconnected");
  }
  if (expected.claw_free) {
    auto cf = is_claw_free(g);
    check("claw-freeness", cf.claw_free == *expected.claw_free, cf.claw_free ? "graph is claw-free" : "graph has an induced claw");
  }
  if (expected.balls2_biconnected) {
    auto w = find_ball2_cut_vertex(g);
    check("radius-2 balls 2-connected", !w.has_value() == *expected.balls2_biconnected,
          w ? "vertex " + str(static_cast<std::size_t>(w->cut)) + " cuts the ball around " + str(static_cast<std::size_t>(w->center))
            : "all radius-2 balls are 2-connected");
  }
  if (expected.no_ball2_biconnected) {
    bool every_ball_cut = true;
    for (std::size_t u = 0; u < g.order() && every_ball_cut; ++u)
      every_ball_cut = is_biconnected(ball(g, static_cast<Vertex>(u), 2).induced) == false;
    check("no radius-2 ball 2-connected", every_ball_cut == *expected.no_ball2_biconnected,
          every_ball_cut ? "every radius-2 ball has a cut vertex" : "some radius-2 ball is 2-connected");
  }
  if (expected.second_neighborhood_exact) {
    auto n2 = second_neighborhood_sizes(g);
    bool all = std::all_of(n2.begin(), n2.end(), [&](std::size_t s) { return s == *expected.second_neighborhood_exact; });
    auto [lo, hi] = std::minmax_element(n2.begin(), n2.end());
    check("second neighborhood size", all,
          "expected " + str(*expected.second_neighborhood_exact) + " everywhere, got range [" +
              (n2.empty() ? "" : str(*lo) + "," + str(*hi)) + "]");
  }
  return r;
}

namespace {

std::size_t arg(const FamilyRequest& r, std::size_t i) {
  if (i >= r.args.size()) throw_input("family '" + r.family + "' is missing parameter " + std::to_string(i + 1));
  return to_size(r.args[i]);
}

void expect_args(const FamilyRequest& r, std::size_t count) {
  if (r.args.size() != count)
    throw_input("family '" + r.family + "' takes " + std::to_string(count) + " parameter(s), got " +
                std::to_string(r.args.size()));
}

std::vector<PartTag> part_sequence(const FamilyRequest& r) {
  std::vector<PartTag> seq;
  for (const auto& a : r.args) {
    auto t = parse_part_tag(a);
    if (!t) throw_input("unknown part tag '" + a + "'");
    seq.push_back(*t);
  }
  return seq;
}

GeneratedGraph plain(Graph g) {
  GeneratedGraph out;
  out.layout.add("all", id_range(0, g.order()));
  out.graph = std::move(g);
  return out;
}

}  // namespace

GeneratedGraph generate(const FamilyRequest& r) {
  const auto& f = r.family;
  if (f == "G") return expect_args(r, 2), gen_G(arg(r, 0), arg(r, 1));
  if (f == "H") return expect_args(r, 2), gen_H(arg(r, 0), arg(r, 1));
  if (f == "T") {
    expect_args(r, 1);
    return gen_T(part_sequence(r).front());
  }
  if (f == "F4") return gen_F4(part_sequence(r));
  if (f == "counterexample") return expect_args(r, 4), gen_counterexample(arg(r, 0), arg(r, 1), arg(r, 2), arg(r, 3)).generated;
  if (f == "D") return expect_args(r, 3), gen_D(arg(r, 0), arg(r, 1), arg(r, 2), r.extended);
  if (f == "Q") return expect_args(r, 2), gen_Q(arg(r, 0), arg(r, 1));
  if (f == "bipartite-minus-matching") return expect_args(r, 1), gen_bipartite_minus_matching(arg(r, 0));
  if (f == "multipartite") return expect_args(r, 2), gen_multipartite(arg(r, 0), arg(r, 1));
  if (f == "kk-rewire") return expect_args(r, 2), gen_kk_rewire(arg(r, 0), arg(r, 1), r.seed);
  if (f == "random-regular") return expect_args(r, 2), plain(random_regular(arg(r, 0), arg(r, 1), r.seed));
  if (f == "complete") return expect_args(r, 1), plain(complete_graph(arg(r, 0)));
  if (f == "cycle") return expect_args(r, 1), plain(cycle_graph(arg(r, 0)));
  if (f == "cycle-square") return expect_args(r, 1), plain(cycle_square(arg(r, 0)));
  if (f == "petersen") return expect_args(r, 0), plain(petersen_graph());
  if (f == "cube") return expect_args(r, 0), plain(cube_graph());
  throw_input("unknown family '" + f + "'");
}

FamilyClaims family_claims(const FamilyRequest& r) {
  const auto& f = r.family;
  FamilyClaims c;
  if (f == "G" || f == "H") {
    const std::size_t k = arg(r, 0), n = arg(r, 1);
    c.order = n * (k + 1);
    c.degree = k;
    c.member = true;
    c.diameter = 3 * n / 2;
    c.connectivity = 2;
    c.locally_connected = false;
    c.claw_free = true;
    c.no_ball2_biconnected = true;
  } else if (f == "F4") {
    const std::size_t n = r.args.size();
    auto seq = part_sequence(r);
    c.degree = 4;
    c.member = true;
    c.diameter_range = std::make_pair(3 * n / 2, 5 * n / 2);
    c.balls2_biconnected = false;
    if (std::any_of(seq.begin(), seq.end(), [](PartTag t) { return t == PartTag::T3 || t == PartTag::T4; })) {
      c.claw_free = false;
      c.locally_connected = false;
    }
  } else if (f == "counterexample") {
    const std::size_t k = arg(r, 0);
    c.order = 8 * k + 6;
    c.degree = k;
    c.member = true;
  } else if (f == "D") {
    const std::size_t n = arg(r, 0), p = arg(r, 1), t = arg(r, 2);
    c.degree = 5 * p + t;
    c.member = true;
    c.diameter = n;
    c.locally_connected = true;
    c.claw_free = false;
    c.second_neighborhood_exact = 5 * p - t - 1;
  } else if (f == "Q") {
    const std::size_t n = arg(r, 0), p = arg(r, 1);
    c.degree = 4 * n;
    c.member = true;
    c.diameter = 3 * p / 2;
    c.balls2_biconnected = true;
    c.locally_connected = false;
    c.claw_free = false;
  } else if (f == "bipartite-minus-matching") {
    const std::size_t k = arg(r, 0);
    c.order = 2 * (k + 1);
    c.degree = k;
    c.member = true;
    c.claw_free = false;
  } else if (f == "multipartite") {
    const std::size_t d = arg(r, 0), parts = arg(r, 1);
    c.order = d * parts;
    c.degree = d * (parts - 1);
    c.member = true;
    c.claw_free = false;
  } else if (f == "kk-rewire") {
    const std::size_t k = arg(r, 0);
    c.order = 2 * k;
    c.degree = k;
    c.member = true;
    c.claw_free = false;
    c.balls2_biconnected = true;
  } else {
    generate(r);  // validates the family name and parameters
  }
  return c;
}

}  // namespace gk
