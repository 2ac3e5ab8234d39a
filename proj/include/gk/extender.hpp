#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

struct ExtensionStep {
  Cycle before;
  Cycle after;
  std::size_t delta = 0;  // 1 or 2
  std::string pattern;
  std::optional<std::array<Vertex, 3>> attachment;  // (w1, v, z) for the proof patterns
};

struct ExtensionOptions {
  // Admit members with 3 <= k < 6; the default scope is k >= 6.
  bool allow_small_k = false;
};

// Throws precondition when u lies on no triangle.
Cycle find_triangle(const Graph& g, Vertex u);

struct Attachment {
  Vertex v = 0;  // neighbor of w off the cycle
  Vertex z = 0;  // cycle vertex adjacent to both w and v
};

// Walks a shortest path inside the neighborhood of w, starting at the cycle
// successor of w, up to the first vertex off the cycle; z is the last cycle
// vertex on that path and v the vertex after it.
Attachment triangle_attachment(const Graph& g, const Cycle& c, Vertex w);

// Returns a longer cycle through all vertices of c plus one or two more.
ExtensionStep extend_cycle(const Graph& g, const Cycle& c, const ExtensionOptions& options = {});

struct HamiltonizeResult {
  Cycle cycle;
  std::vector<ExtensionStep> steps;
  std::size_t pattern_hits = 0;  // steps settled by a proof pattern before exhaustive search
};

// Starts from a triangle through vertex 0 and extends until Hamiltonian.
HamiltonizeResult hamiltonize(const Graph& g, const ExtensionOptions& options = {});

}  // namespace gk
