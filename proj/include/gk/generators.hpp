#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk/graph.hpp"
#include "gk/parts.hpp"

namespace gk {

// Named vertex sets of a generated graph, in construction order.
struct Layout {
  std::vector<std::pair<std::string, VertexSet>> sets;

  void add(std::string name, VertexSet ids) { sets.emplace_back(std::move(name), std::move(ids)); }
  const VertexSet& at(std::string_view name) const;
};

struct GeneratedGraph {
  Graph graph;
  Layout layout;
};

// Layout: "V0" = v_1..v_n at ids 0..n-1, then "V1".."Vn" (k ids each).
// v_i meets the first floor(k/2) ids of V_i and the last ceil(k/2) ids of V_{i-1}.
GeneratedGraph gen_G(std::size_t k, std::size_t n);
// Layout: "u" = u_1..u_n, "v" = v_1..v_n, then "W1".."Wn" (k-1 ids each).
GeneratedGraph gen_H(std::size_t k, std::size_t n);

// A single part with ports a = 0 and b = last id.
GeneratedGraph gen_T(PartTag tag);
// Cyclic chain of parts; hinge i (id i) is the a-port of part i and the
// b-port of part i-1. Layout: "hinges", then "segment1".."segmentN" (interior slots).
GeneratedGraph gen_F4(const std::vector<PartTag>& sequence);

struct QuotientCertificate {
  std::vector<std::string> names;
  std::vector<VertexSet> blocks;
  Graph quotient;
  std::vector<std::size_t> hubs;     // block indices
  std::vector<std::size_t> transits; // block indices
  std::string reason;
};

struct QuotientCheck {
  bool ok = false;
  std::string failure;
};

// Checks that blocks partition V, the quotient matches, hubs are pairwise
// non-adjacent, and every transit block touches the rest of the graph through
// exactly two vertices, one facing each of two distinct hubs, with at least one
// further interior vertex. An odd number of such transits between the same two
// hubs rules out a Hamilton cycle.
QuotientCheck verify_quotient_certificate(const Graph& g, const QuotientCertificate& cert);

struct Counterexample {
  GeneratedGraph generated;
  QuotientCertificate certificate;
};

// Requires k_1 + k_2 + k_3 = k, each k_i >= 2 (so k >= 6).
// Layout: "Ht", then per i: "Ui","Vi","Vi'","Ui'","wi","wi'", then "Ht'".
Counterexample gen_counterexample(std::size_t k, std::size_t k1, std::size_t k2, std::size_t k3);

// 2n blocks of 2p vertices; blocks and cyclically consecutive block pairs are
// complete, then the first p-1-t round-robin color classes inside each block
// are removed. Default range: p >= 6, 0 <= t <= 4. With `extended`, also
// 2 <= p <= 5 with t <= p-2.
GeneratedGraph gen_D(std::size_t n, std::size_t p, std::size_t t, bool extended = false);

// Edges of color `color` in the round-robin 1-factorization of K_{2p}.
std::vector<Edge> round_robin_color_class(std::size_t p, std::size_t color);

// 4n-regular; blocks of sizes 2n,2n,2 then (2n,2n-1,2) repeated p-1 times,
// joined cyclically, with perfect matchings removed from the first three blocks.
GeneratedGraph gen_Q(std::size_t n, std::size_t p);

GeneratedGraph gen_bipartite_minus_matching(std::size_t k);
// Complete r-partite graph with parts of size d; degree d(r-1).
GeneratedGraph gen_multipartite(std::size_t d, std::size_t r);
// K_{k,k} with a seeded matching of 2t edges replaced by same-side pairs.
GeneratedGraph gen_kk_rewire(std::size_t k, std::size_t t, std::uint64_t seed);

// Pairing model with restart on the first loop or repeated edge.
Graph random_regular(std::size_t k, std::size_t n, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph cycle_square(std::size_t n);
Graph petersen_graph();
Graph cube_graph();

// Claimed properties of a family member. Unset fields are not checked.
struct FamilyClaims {
  std::optional<std::size_t> order;
  std::optional<std::size_t> degree;
  std::optional<bool> member;
  std::optional<std::size_t> diameter;
  std::optional<std::pair<std::size_t, std::size_t>> diameter_range;
  std::optional<std::size_t> connectivity;
  std::optional<bool> locally_connected;
  std::optional<bool> claw_free;
  std::optional<bool> balls2_biconnected;
  std::optional<bool> no_ball2_biconnected;  // every radius-2 ball has a cut vertex
  std::optional<std::size_t> second_neighborhood_exact;
};

struct ValidationReport {
  std::vector<std::string> checked;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_family(const Graph& g, const FamilyClaims& expected);

// Vertex connectivity by exhaustive separator search; intended for small graphs.
std::size_t vertex_connectivity(const Graph& g, std::size_t cap = 3);

// Family lookup by name, shared by the CLI and the C API. Args are the
// family's integer parameters (or part tags for "F4").
struct FamilyRequest {
  std::string family;
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  bool extended = false;
};
GeneratedGraph generate(const FamilyRequest& request);
FamilyClaims family_claims(const FamilyRequest& request);

}  // namespace gk
