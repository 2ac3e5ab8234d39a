#include "gk/io.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>

namespace gk {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t skip_blank(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = skip_blank(text, 0);
  if (text.substr(pos, kHeader.size()) == kHeader) pos += kHeader.size();
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= end) throw ParseError(at, "graph6: unexpected end of input");
    int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > 126) throw ParseError(at, "graph6: byte out of range 63..126");
    return static_cast<std::uint64_t>(c - kBias);
  };

  if (pos >= end) throw ParseError(pos, "graph6: empty input");
  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = sextet(pos++);
  } else if (pos + 1 < end && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  }
  if (n > (1u << 24)) throw ParseError(pos, "graph6: vertex count too large");

  std::vector<Edge> edges;
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (end - pos != bytes)
    throw ParseError(end - pos < bytes ? end : pos + bytes,
                     "graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(end - pos));
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = sextet(pos + k / 6);
      if (byte & (32u >> (k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bytes * 6; ++k)
    if (sextet(pos + k / 6) & (32u >> (k % 6))) throw ParseError(pos + k / 6, "graph6: nonzero padding bits");
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("edge JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw ParseError(0, "edge JSON: expected an object with \"n\" and \"edges\"");
  const auto& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 0) throw ParseError(0, "edge JSON: \"n\" must be a nonnegative integer");
  if (!doc["edges"].is_array()) throw ParseError(0, "edge JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(0, "edge JSON: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(jn.get<std::size_t>(), edges);
}

std::string emit_edge_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

std::string emit_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::size_t pos = skip_blank(text, 0);
  // graph6 on 60..62 vertices also starts with '{'; edge JSON opens with a key or is empty
  if (pos < text.size() && text[pos] == '{') {
    const std::size_t next = skip_blank(text, pos + 1);
    const bool empty_object = next < text.size() && text[next] == '}' && skip_blank(text, next + 1) == text.size();
    if (next >= text.size() || text[next] == '"' || empty_object) return parse_edge_json(text);
  }
  return parse_graph6(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return emit_graph6(g);
    case GraphFormat::json:
      return emit_edge_json(g);
    case GraphFormat::dot:
      return emit_dot(g);
  }
  return {};
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "json") return GraphFormat::json;
  if (name == "dot") return GraphFormat::dot;
  throw_input("unknown graph format '" + std::string(name) + "'");
}

}  // namespace gk
