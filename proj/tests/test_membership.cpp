#include "doctest.h"
#include "fixtures.hpp"
#include "gk/generators.hpp"
#include "gk/membership.hpp"

using namespace gk;

TEST_CASE("classify") {
  auto k4 = classify(complete_graph(4));
  CHECK(k4.member);
  CHECK(k4.k == 3u);
  CHECK(k4.second_neighborhood == std::vector<std::size_t>(4, 0));

  auto p = classify(petersen_graph());
  CHECK_FALSE(p.member);
  CHECK(p.k == 3u);
  CHECK(p.second_neighborhood == std::vector<std::size_t>(10, 6));
  CHECK(p.violating_vertex == 0);

  auto q3 = classify(cube_graph());
  CHECK(q3.member);
  CHECK(q3.second_neighborhood == std::vector<std::size_t>(8, 3));

  auto split = classify(fixtures::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  CHECK_FALSE(split.member);
  CHECK_FALSE(split.connected);
  CHECK_FALSE(classify(fixtures::path(4)).member);
}

TEST_CASE("membership predicates") {
  auto h = membership_predicates(gen_H(5, 2).graph, 5);
  CHECK(h.second_neighborhood_bound);
  CHECK(h.ball_size_bound);
  CHECK(h.degree_sum_bound);
  CHECK(h.common_neighbor_bound);

  auto p = membership_predicates(petersen_graph(), 3);
  CHECK_FALSE(p.second_neighborhood_bound);
  CHECK_FALSE(p.ball_size_bound);
  CHECK_FALSE(p.degree_sum_bound);
  CHECK_FALSE(p.common_neighbor_bound);

  auto k4 = membership_predicates(complete_graph(4), 3);
  CHECK(k4.all_equal());
  CHECK(k4.common_neighbor_bound);

  CHECK_THROWS_AS(membership_predicates(fixtures::path(4), 2), Error);
  CHECK_THROWS_AS(membership_predicates(complete_graph(4), 2), Error);
}

TEST_CASE("cut vertex profile") {
  auto h = gen_H(3, 2);
  const Vertex v1 = h.layout.at("v").front();
  auto prof = cut_vertex_profile(h.graph, v1);
  REQUIRE(prof.has_value());
  CHECK(prof->first.size() == 3);
  CHECK(prof->second.size() == 3);
  CHECK(prof->neighbor_split == std::pair<std::size_t, std::size_t>{1, 2});

  CHECK_FALSE(cut_vertex_profile(complete_graph(4), 0).has_value());

  auto g = gen_G(5, 2);
  auto gp = cut_vertex_profile(g.graph, g.layout.at("V0").front());
  REQUIRE(gp.has_value());
  CHECK(gp->neighbor_split == std::pair<std::size_t, std::size_t>{2, 3});

  try {
    cut_vertex_profile(petersen_graph(), 0);
    FAIL("expected not_member");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_member);
  }
}

TEST_CASE("radius-2 ball biconnectivity") {
  CHECK(balls2_all_biconnected(gen_Q(2, 2).graph));
  CHECK_FALSE(balls2_all_biconnected(gen_H(4, 2).graph));
  CHECK(balls2_all_biconnected(complete_graph(4)));
  auto w = find_ball2_cut_vertex(gen_H(4, 2).graph);
  REQUIRE(w.has_value());
  CHECK(is_own_ball_cut_vertex(gen_H(4, 2).graph, w->cut));
}

TEST_CASE("triangle density") {
  CHECK(min_edge_triangles(complete_graph(10)) == 8);
  CHECK(triangle_density_implies_membership(complete_graph(10)));
  CHECK(min_edge_triangles(cycle_graph(6)) == 0);
  CHECK_FALSE(triangle_density_implies_membership(cycle_graph(6)));
  // k = 8 is below the proposition's range.
  CHECK_FALSE(triangle_density_implies_membership(complete_graph(9)));
}

TEST_CASE("cut vertex structure on generated forms") {
  std::vector<Graph> graphs;
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::size_t n = 2; n <= 4; ++n) {
      graphs.push_back(gen_H(k, n).graph);
      graphs.push_back(gen_G(k, n).graph);
    }
  graphs.push_back(gen_F4({PartTag::T1, PartTag::T2, PartTag::T3}).graph);
  graphs.push_back(gen_F4({PartTag::T4, PartTag::T4}).graph);
  for (const auto& g : graphs) {
    const std::size_t k = *is_k_regular(g);
    std::size_t cuts = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      auto prof = cut_vertex_profile(g, v);
      if (!prof) continue;
      ++cuts;
      CHECK(prof->first.size() == k);
      CHECK(prof->second.size() == k);
    }
    CHECK(cuts >= 2);
  }
}

TEST_CASE("adding a long edge never shrinks other second neighborhoods") {
  std::mt19937_64 rng(11);
  std::size_t tried = 0;
  std::vector<Graph> sample;
  for (std::size_t n = 3; n <= 6; ++n) sample.push_back(gen_H(3 + n % 3, n).graph);
  for (int s = 0; s < 40; ++s) sample.push_back(random_regular(3, 12 + 2 * (s % 4), rng()));
  for (const auto& g : sample) {
    auto before = second_neighborhood_sizes(g);
    for (Vertex a = 0; a < static_cast<Vertex>(g.order()); ++a)
      for (Vertex b = a + 1; b < static_cast<Vertex>(g.order()); ++b) {
        auto d = distance(g, a, b);
        if (!d || *d < 3) continue;
        auto e = g.edges();
        e.emplace_back(a, b);
        auto after = second_neighborhood_sizes(Graph(g.order(), e));
        for (std::size_t u = 0; u < g.order(); ++u)
          if (u != static_cast<std::size_t>(a) && u != static_cast<std::size_t>(b)) CHECK(after[u] >= before[u]);
        ++tried;
        goto next;
      }
  next:;
  }
  CHECK(tried > 0);
}
