#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::size_t kIsomorphismLimit = 64;

enum class OracleOutcome { found, not_hamiltonian, budget_exceeded };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::not_hamiltonian;
  std::optional<Cycle> cycle;  // set iff outcome == found
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
};

// Exact Hamiltonicity by backtracking over paths anchored at vertex 0.
// Deterministic: the same graph and budget give the same outcome and node count.
OracleResult hamiltonian_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // mapping[v] is the image in h of vertex v of g
};

// Individualize-and-refine backtracking. Both graphs must have at most
// kIsomorphismLimit vertices.
IsomorphismResult isomorphic(const Graph& g, const Graph& h);

}  // namespace gk
