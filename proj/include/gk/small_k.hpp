#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gk/graph.hpp"
#include "gk/oracle.hpp"
#include "gk/parts.hpp"

namespace gk {

enum class SegmentKind { H, G, T1, T2, T3, T4 };
std::string_view to_string(SegmentKind kind);

// One hinge-to-hinge piece of a canonical form. Slot order:
//   H:     the k-1 common neighbors of entry and partner (ascending), then the partner
//   G:     the two neighbors of entry (ascending), then the three neighbors of exit
//   T1-T4: the part's slot roles (see parts.hpp)
struct Segment {
  SegmentKind kind = SegmentKind::H;
  Vertex entry = 0;
  Vertex exit = 0;
  std::vector<Vertex> slots;
};

enum class FormVariant { h_form, g_form, f4_sequence, all_balls_2connected };
std::string_view to_string(FormVariant variant);

struct CanonicalForm {
  FormVariant variant = FormVariant::all_balls_2connected;
  std::size_t k = 0;
  std::vector<Segment> segments;  // in walk order; segments[i].exit == segments[i+1].entry
  std::vector<Vertex> hinges;     // segments[i].entry
  // Segment tags, lexicographically least over rotations and reflections.
  std::vector<std::string> canonical_tags() const;
  std::size_t n() const { return segments.size(); }
};

// Least rotation/reflection of a cyclic tag sequence.
std::vector<std::string> canonical_cyclic(std::vector<std::string> tags);

// Requires a member of the class with k in {3,4,5}.
CanonicalForm decompose(const Graph& g);

// Builds the graph described by a form over the same vertex ids; decompose
// compares it with its input.
Graph graph_of_form(const CanonicalForm& form, std::size_t order);

// Threads each segment from entry to exit through all of its slots.
Cycle hamilton_from_form(const CanonicalForm& form, const Graph& g);

enum class Provenance { structural, oracle, cycle_graph };
std::string_view to_string(Provenance p);

struct HamCertificate {
  Cycle cycle;
  Provenance provenance = Provenance::structural;
  std::optional<CanonicalForm> form;
  std::uint64_t oracle_nodes = 0;
};

// Requires a member with k in {2,...,5}.
HamCertificate hamilton_small_k(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace gk
