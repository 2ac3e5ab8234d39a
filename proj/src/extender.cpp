#include "gk/extender.hpp"

#include <algorithm>
#include <deque>

#include "gk/membership.hpp"

namespace gk {
namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

void check_hypotheses(const Graph& g, const ExtensionOptions& options) {
  auto report = classify(g);
  if (!report.member) throw Error(ErrorKind::not_member, "cycle extension requires a member graph: " + report.reason);
  const std::size_t k = *report.k;
  const std::size_t min_k = options.allow_small_k ? 3 : 6;
  if (k < min_k)
    throw_precondition("cycle extension requires k >= " + std::to_string(min_k) + ", got k = " + std::to_string(k));
  auto lc = is_locally_connected(g);
  if (!lc.connected) throw_precondition("graph is not locally connected at vertex " + vstr(*lc.witness));
}

std::optional<Attachment> attachment_in(const Graph& g, const std::vector<Vertex>& seq, const std::vector<char>& on,
                                        std::size_t i) {
  const Vertex w = seq[i];
  const Vertex succ = seq[(i + 1) % seq.size()];
  const auto& nb = g.neighbors(w);
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{succ};
  seen[succ] = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || !std::binary_search(nb.begin(), nb.end(), y)) continue;
      seen[y] = 1;
      parent[y] = x;
      if (!on[y]) return Attachment{y, x};
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

struct Search {
  const Graph& g;
  std::vector<Vertex> seq;
  std::vector<char> on;

  std::size_t m() const { return seq.size(); }
  Vertex at(std::size_t i) const { return seq[i % m()]; }
  bool adj(Vertex a, Vertex b) const { return g.has_edge(a, b); }

  // seq[from], seq[from+1], ... for count vertices (cyclic).
  void forward(std::vector<Vertex>& out, std::size_t from, std::size_t count) const {
    for (std::size_t s = 0; s < count; ++s) out.push_back(at(from + s));
  }
  // seq[from], seq[from-1], ... for count vertices (cyclic).
  void backward(std::vector<Vertex>& out, std::size_t from, std::size_t count) const {
    for (std::size_t s = 0; s < count; ++s) out.push_back(at(from + m() * 2 - s));
  }

  std::optional<Cycle> accept(std::vector<Vertex> cand, std::size_t delta) const {
    Cycle c{std::move(cand)};
    if (c.length() != m() + delta || !is_cycle_of(g, c)) return std::nullopt;
    return c;
  }

  // seq[i] v seq[j] seq[j-1] ... seq[i+1] [u] seq[j+1] ... seq[i-1]
  std::optional<Cycle> rotate(std::size_t i, std::size_t j, Vertex v, std::optional<Vertex> u = {}) const {
    if (i == j || !adj(at(i), v) || !adj(v, at(j))) return std::nullopt;
    const std::size_t span = (j + m() - i) % m();  // steps from i to j
    std::vector<Vertex> out{at(i), v};
    backward(out, j, span);
    if (u) {
      if (!adj(at(i + 1), *u) || !adj(*u, at(j + 1))) return std::nullopt;
      out.push_back(*u);
    } else if (!adj(at(i + 1), at(j + 1))) {
      return std::nullopt;
    }
    forward(out, j + 1, m() - span - 1);
    return accept(std::move(out), u ? 2 : 1);
  }

  // seq[i] v seq[j] seq[i+1] ... seq[j-1] seq[j+1] ... seq[i-1]
  std::optional<Cycle> chord(std::size_t i, std::size_t j, Vertex v) const {
    const std::size_t span = (j + m() - i) % m();
    if (span < 2 || span == m() - 1) return std::nullopt;
    if (!adj(at(i), v) || !adj(v, at(j)) || !adj(at(j), at(i + 1)) || !adj(at(j + m() - 1), at(j + 1)))
      return std::nullopt;
    std::vector<Vertex> out{at(i), v, at(j)};
    forward(out, i + 1, span - 1);
    forward(out, j + 1, m() - span - 1);
    return accept(std::move(out), 1);
  }

  // seq[i] v seq[i+2] seq[i+1] u seq[i+3] ... seq[i-1]
  std::optional<Cycle> pair(std::size_t i, Vertex v, Vertex u) const {
    if (m() < 3 || u == v) return std::nullopt;
    std::vector<Vertex> out{at(i), v, at(i + 2), at(i + 1), u};
    forward(out, i + 3, m() - 3);
    return accept(std::move(out), 2);
  }

  std::optional<Cycle> insert(std::size_t i, Vertex v, std::optional<Vertex> y = {}) const {
    if (!adj(at(i), v)) return std::nullopt;
    std::vector<Vertex> out{at(i), v};
    if (y) {
      if (!adj(v, *y)) return std::nullopt;
      out.push_back(*y);
    }
    if (!adj(out.back(), at(i + 1))) return std::nullopt;
    forward(out, i + 1, m() - 1);
    return accept(std::move(out), y ? 2 : 1);
  }

  std::vector<Vertex> outside_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (!on[v]) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  std::optional<std::size_t> index_of(Vertex x) const {
    auto it = std::find(seq.begin(), seq.end(), x);
    if (it == seq.end()) return std::nullopt;
    return static_cast<std::size_t>(it - seq.begin());
  }
};

std::optional<ExtensionStep> proof_patterns(const Search& s) {
  std::vector<std::size_t> order(s.m());
  for (std::size_t i = 0; i < s.m(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.seq[a] < s.seq[b]; });
  for (std::size_t i : order) {
    const Vertex w1 = s.seq[i];
    auto att = attachment_in(s.g, s.seq, s.on, i);
    if (!att) continue;
    const Vertex v = att->v;
    ExtensionStep step;
    step.attachment = std::array<Vertex, 3>{w1, v, att->z};
    const std::size_t zi = *s.index_of(att->z);
    auto done = [&](std::optional<Cycle> c, const char* name) {
      if (!c) return false;
      step.after = std::move(*c);
      step.pattern = name;
      return true;
    };
    if (zi == (i + 1) % s.m()) {
      if (done(s.insert(i, v), "proof-insert")) return step;
    } else if (done(s.rotate(i, zi, v), "proof-rotate")) {
      return step;
    }
    for (Vertex wi : s.g.neighbors(v))
      if (auto j = s.index_of(wi); j && *j != i && done(s.chord(i, *j, v), "proof-chord")) return step;
    if (s.adj(v, s.at(i + 2)))
      for (Vertex u : s.g.neighbors(s.at(i + 1)))
        if (!s.on[u] && u != v && s.adj(u, s.at(i + 3)) && done(s.pair(i, v, u), "proof-pair")) return step;
  }
  return std::nullopt;
}

std::optional<ExtensionStep> single_insertions(const Search& s) {
  auto outside = s.outside_vertices();
  for (Vertex v : outside) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < s.m(); ++i)
      if (s.adj(s.seq[i], v)) w.push_back(i);
    for (std::size_t i : w)
      if (auto c = s.insert(i, v)) return ExtensionStep{{}, std::move(*c), 1, "insert", std::nullopt};
    for (std::size_t i : w)
      for (std::size_t j : w) {
        if (auto c = s.rotate(i, j, v)) return ExtensionStep{{}, std::move(*c), 1, "rotate", std::nullopt};
        if (auto c = s.chord(i, j, v)) return ExtensionStep{{}, std::move(*c), 1, "chord", std::nullopt};
      }
  }
  return std::nullopt;
}

std::optional<ExtensionStep> double_insertions(const Search& s) {
  auto outside = s.outside_vertices();
  for (Vertex v : outside) {
    for (std::size_t i = 0; i < s.m(); ++i) {
      if (!s.adj(s.seq[i], v)) continue;
      for (Vertex y : s.g.neighbors(v))
        if (!s.on[y])
          if (auto c = s.insert(i, v, y)) return ExtensionStep{{}, std::move(*c), 2, "insert-pair", std::nullopt};
      for (std::size_t j = 0; j < s.m(); ++j) {
        if (j == i || !s.adj(v, s.seq[j])) continue;
        for (Vertex u : s.g.neighbors(s.at(i + 1)))
          if (!s.on[u] && u != v)
            if (auto c = s.rotate(i, j, v, u)) return ExtensionStep{{}, std::move(*c), 2, "rotate-pair", std::nullopt};
      }
    }
  }
  return std::nullopt;
}

ExtensionStep extend_unchecked(const Graph& g, const Cycle& c, bool& by_pattern) {
  if (!is_cycle_of(g, c)) throw_input("input is not a cycle of the graph");
  if (c.length() >= g.order()) throw_precondition("cycle is already Hamiltonian");
  std::vector<char> on(g.order(), 0);
  for (Vertex v : c.vertices) on[v] = 1;

  std::vector<std::vector<Vertex>> orientations{c.vertices, c.vertices};
  std::reverse(orientations[1].begin() + 1, orientations[1].end());
  for (int phase = 0; phase < 3; ++phase) {
    for (const auto& seq : orientations) {
      Search s{g, seq, on};
      std::optional<ExtensionStep> step = phase == 0   ? proof_patterns(s)
                                          : phase == 1 ? single_insertions(s)
                                                       : double_insertions(s);
      if (step) {
        step->before = c;
        step->delta = step->after.length() - c.length();
        by_pattern = phase == 0;
        return std::move(*step);
      }
    }
  }
  throw_contradiction("no extension by one or two vertices exists for a cycle of length " +
                      std::to_string(c.length()));
}

}  // namespace

Cycle find_triangle(const Graph& g, Vertex u) {
  const auto& nb = g.neighbors(u);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) return Cycle{{u, nb[i], nb[j]}};
  throw_precondition("vertex " + vstr(u) + " lies on no triangle, so the graph is not locally connected");
}

Attachment triangle_attachment(const Graph& g, const Cycle& c, Vertex w) {
  if (!is_cycle_of(g, c)) throw_input("input is not a cycle of the graph");
  auto it = std::find(c.vertices.begin(), c.vertices.end(), w);
  if (it == c.vertices.end()) throw_precondition("vertex " + vstr(w) + " is not on the cycle");
  std::vector<char> on(g.order(), 0);
  for (Vertex v : c.vertices) on[v] = 1;
  const auto& nb = g.neighbors(w);
  if (std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return on[x]; }))
    throw_precondition("every neighbor of " + vstr(w) + " lies on the cycle");
  auto att = attachment_in(g, c.vertices, on, static_cast<std::size_t>(it - c.vertices.begin()));
  if (!att) throw_precondition("neighborhood of " + vstr(w) + " is disconnected");
  return *att;
}

ExtensionStep extend_cycle(const Graph& g, const Cycle& c, const ExtensionOptions& options) {
  check_hypotheses(g, options);
  bool by_pattern = false;
  return extend_unchecked(g, c, by_pattern);
}

HamiltonizeResult hamiltonize(const Graph& g, const ExtensionOptions& options) {
  check_hypotheses(g, options);
  HamiltonizeResult r;
  r.cycle = find_triangle(g, 0);
  while (r.cycle.length() < g.order()) {
    bool by_pattern = false;
    auto step = extend_unchecked(g, r.cycle, by_pattern);
    if (by_pattern) ++r.pattern_hits;
    r.cycle = step.after;
    r.steps.push_back(std::move(step));
  }
  if (!is_hamiltonian_cycle(g, r.cycle)) throw_contradiction("extension ended on an invalid cycle");
  return r;
}

}  // namespace gk
