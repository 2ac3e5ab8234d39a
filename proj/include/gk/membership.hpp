#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

// A vertex that is a cut vertex of the radius-2 ball around `center`.
struct BallCutWitness {
  Vertex center = 0;
  Vertex cut = 0;
  friend bool operator==(const BallCutWitness&, const BallCutWitness&) = default;
};

struct MembershipReport {
  bool connected = false;
  std::optional<std::size_t> k;        // set when the graph is regular
  std::vector<std::size_t> second_neighborhood;  // |N_2(u)| per vertex
  bool member = false;
  std::string reason;                  // empty when member
  std::optional<Vertex> violating_vertex;        // first u with |N_2(u)| > k
  std::optional<BallCutWitness> ball_cut;        // only computed for members
};

MembershipReport classify(const Graph& g);

std::vector<std::size_t> second_neighborhood_sizes(const Graph& g);

// The four equivalent characterizations of membership for a connected
// k-regular graph: (i) |N_2(u)| <= k, (ii) k >= (|M_2(u)|-1)/2,
// (iii) d(u)+d(v) >= |M_2(w)|-1 and (iv) |N(u)∩N(v)| >= |M_2(w)\(N(u)∪N(v))|-1
// over induced paths uwv. (iii) and (iv) are vacuously true without induced paths.
struct MembershipPredicates {
  bool second_neighborhood_bound = false;
  bool ball_size_bound = false;
  bool degree_sum_bound = false;
  bool common_neighbor_bound = false;

  bool all_equal() const {
    return second_neighborhood_bound == ball_size_bound && ball_size_bound == degree_sum_bound &&
           degree_sum_bound == common_neighbor_bound;
  }
};
MembershipPredicates membership_predicates(const Graph& g, std::size_t k);

struct CutVertexProfile {
  Vertex v = 0;
  VertexSet first;   // component of G_2(v) - v holding the lowest-id neighbor of v
  VertexSet second;
  std::pair<std::size_t, std::size_t> neighbor_split;  // |N(v) ∩ first|, |N(v) ∩ second|
};

// nullopt when v is not a cut vertex of any radius-2 ball. Requires a member
// graph. Throws internal_contradiction if the structure around a cut vertex
// deviates from the two-cliques-of-size-k shape.
std::optional<CutVertexProfile> cut_vertex_profile(const Graph& g, Vertex v);

// Whether v is a cut vertex of its own radius-2 ball (no membership check).
bool is_own_ball_cut_vertex(const Graph& g, Vertex v);

std::optional<BallCutWitness> find_ball2_cut_vertex(const Graph& g);
inline bool balls2_all_biconnected(const Graph& g) { return !find_ball2_cut_vertex(g).has_value(); }

// Minimum number of triangles through an edge; 0 for edgeless graphs.
std::size_t min_edge_triangles(const Graph& g);
// True when g is connected, k-regular with k >= 9 and every edge lies in at
// least k-4 triangles, the hypothesis under which membership is guaranteed.
bool triangle_density_implies_membership(const Graph& g);

}  // namespace gk
