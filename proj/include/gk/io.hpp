#pragma once

#include <string>
#include <string_view>

#include "gk/graph.hpp"

namespace gk {

enum class GraphFormat { graph6, json, dot };

// Standard graph6 ASCII encoding. An optional ">>graph6<<" header and
// trailing whitespace are accepted. Malformed input throws ParseError.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// {"n": N, "edges": [[u, v], ...]}
Graph parse_edge_json(std::string_view text);
std::string emit_edge_json(const Graph& g);

std::string emit_dot(const Graph& g);

// JSON when the first non-blank byte is '{', graph6 otherwise.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g, GraphFormat format);

GraphFormat parse_format(std::string_view name);

}  // namespace gk
