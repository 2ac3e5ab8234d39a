#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

// The four segment shapes of 4-regular members with a 2/2 split at every
// hinge. Each part has two ports, a (entry) and b (exit), of degree 2.
enum class PartTag { T1, T2, T3, T4 };

inline constexpr std::array<PartTag, 4> kAllParts{PartTag::T1, PartTag::T2, PartTag::T3, PartTag::T4};

std::string_view to_string(PartTag tag);
std::optional<PartTag> parse_part_tag(std::string_view name);

// Interior slots in role order:
//   T1: w1 w2 u1 u2
//   T2: w1 w2 u1 u2 x1 x2 y1 y2
//   T3: w1 w2 u1 u2 x1 x2
//   T4: w1 w2 u1 u2 x1 x2 y1 y2
// w1, w2 are the neighbors of a; the last two slots are the neighbors of b.
std::size_t part_slot_count(PartTag tag);

// Edges of the part over local ids: a = 0, slot i = i + 1, b = slots + 1.
std::vector<Edge> part_edges(PartTag tag);

// Hamilton a-b path through the part, as slot indices (a and b omitted).
std::span<const int> part_path_template(PartTag tag);

}  // namespace gk
