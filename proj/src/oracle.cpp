#include "gk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace gk {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool operator==(const Bits&) const = default;

  // Calls f(i) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      for (std::uint64_t w = words_[wi]; w; w &= w - 1) f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), budget_(budget), adj_(n_, Bits(n_)), unvisited_(n_), free_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) adj_[v].set(static_cast<std::size_t>(u));
      free_[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
      if (v != 0) unvisited_.set(v);
    }
  }

  OracleResult run() {
    OracleResult result;
    result.budget = budget_;
    bool trivially_impossible = n_ < 3 || !is_connected(g_);
    for (std::size_t v = 0; v < n_ && !trivially_impossible; ++v)
      if (g_.degree(static_cast<Vertex>(v)) < 2) trivially_impossible = true;
    if (!trivially_impossible) {
      path_.push_back(0);
      if (search()) {
        result.outcome = OracleOutcome::found;
        result.cycle = Cycle{path_};
      } else {
        result.outcome = exceeded_ ? OracleOutcome::budget_exceeded : OracleOutcome::not_hamiltonian;
      }
    }
    result.nodes = std::min(nodes_, budget_);
    return result;
  }

 private:
  bool search() {
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    const auto x = static_cast<std::size_t>(path_.back());
    if (!unvisited_.any()) return adj_[x].test(0) && path_[1] < path_.back();

    std::vector<std::size_t> candidates;
    std::size_t forced = 0, forced_vertex = 0;
    adj_[x].for_each([&](std::size_t y) {
      if (!unvisited_.test(y)) return;
      candidates.push_back(y);
      if (path_.size() > 1 && free_[y] == 2) ++forced, forced_vertex = y;
    });
    if (forced > 1) return false;
    if (forced == 1) candidates = {forced_vertex};
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return free_[a] < free_[b]; });

    const bool becomes_interior = path_.size() > 1;
    if (becomes_interior) adj_[x].for_each([&](std::size_t z) { --free_[z]; });
    bool found = false;
    for (std::size_t y : candidates) {
      path_.push_back(static_cast<Vertex>(y));
      unvisited_.reset(y);
      if (feasible(x, y) && search()) {
        found = true;
        break;
      }
      unvisited_.set(y);
      path_.pop_back();
      if (exceeded_) break;
    }
    if (becomes_interior && !found) adj_[x].for_each([&](std::size_t z) { ++free_[z]; });
    return found;
  }

  bool feasible(std::size_t old_end, std::size_t end) const {
    if (!unvisited_.any()) return adj_[end].test(0);
    bool ok = true;
    if (path_.size() > 2) {
      adj_[old_end].for_each([&](std::size_t z) {
        if (unvisited_.test(z) && free_[z] < 2) ok = false;
      });
      if (!ok) return false;
    }
    if (!adj_[end].intersects(unvisited_)) return false;
    // Closing edge must reach a last vertex above the second one.
    bool closing = false;
    const auto second = static_cast<std::size_t>(path_[1]);
    adj_[0].for_each([&](std::size_t z) {
      if (unvisited_.test(z) && z > second) closing = true;
    });
    if (!closing) return false;

    // Unvisited vertices must all be reachable from the current end.
    Bits reached(n_), frontier(n_);
    frontier.set(end);
    while (frontier.any()) {
      Bits next(n_);
      frontier.for_each([&](std::size_t v) {
        const auto& aw = adj_[v].words();
        const auto& uw = unvisited_.words();
        auto& rw = reached.words();
        auto& nw = next.words();
        for (std::size_t i = 0; i < aw.size(); ++i) {
          std::uint64_t fresh = aw[i] & uw[i] & ~rw[i];
          rw[i] |= fresh;
          nw[i] |= fresh;
        }
      });
      frontier = std::move(next);
    }
    return reached == unvisited_;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Bits> adj_;
  Bits unvisited_;
  std::vector<int> free_;  // neighbors that are not interior path vertices
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

// Stable coloring of two graphs refined jointly so colors are comparable.
class Refiner {
 public:
  Refiner(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  // Refines in place; returns false if the color histograms diverge.
  bool refine(std::vector<int>& cg, std::vector<int>& ch) const {
    std::size_t classes = count_classes(cg, ch);
    while (true) {
      std::map<std::pair<int, std::vector<int>>, int> ids;
      auto signature = [&](const Graph& gr, const std::vector<int>& c, std::size_t v) {
        std::vector<int> nb;
        for (Vertex u : gr.neighbors(static_cast<Vertex>(v))) nb.push_back(c[u]);
        std::sort(nb.begin(), nb.end());
        return std::make_pair(c[v], std::move(nb));
      };
      std::vector<std::pair<int, std::vector<int>>> sg, sh;
      for (std::size_t v = 0; v < cg.size(); ++v) ids.emplace(sg.emplace_back(signature(g_, cg, v)), 0);
      for (std::size_t v = 0; v < ch.size(); ++v) ids.emplace(sh.emplace_back(signature(h_, ch, v)), 0);
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (std::size_t v = 0; v < cg.size(); ++v) cg[v] = ids[sg[v]];
      for (std::size_t v = 0; v < ch.size(); ++v) ch[v] = ids[sh[v]];
      if (!same_histogram(cg, ch)) return false;
      std::size_t now = count_classes(cg, ch);
      if (now == classes) return true;
      classes = now;
    }
  }

  static bool same_histogram(const std::vector<int>& a, const std::vector<int>& b) {
    auto x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

 private:
  static std::size_t count_classes(const std::vector<int>& a, const std::vector<int>& b) {
    auto x = a;
    x.insert(x.end(), b.begin(), b.end());
    std::sort(x.begin(), x.end());
    return static_cast<std::size_t>(std::unique(x.begin(), x.end()) - x.begin());
  }

  const Graph& g_;
  const Graph& h_;
};

bool match(const Graph& g, const Graph& h, const Refiner& refiner, std::vector<int> cg, std::vector<int> ch,
           std::vector<Vertex>& mapping) {
  if (!refiner.refine(cg, ch)) return false;
  const std::size_t n = cg.size();
  std::map<int, std::size_t> cell_size;
  for (int c : cg) ++cell_size[c];
  // Target: the lowest vertex in the smallest non-singleton cell.
  std::optional<std::size_t> target;
  for (std::size_t v = 0; v < n; ++v) {
    if (cell_size[cg[v]] < 2) continue;
    if (!target || cell_size[cg[v]] < cell_size[cg[*target]]) target = v;
  }
  if (!target) {
    std::map<int, Vertex> image;
    for (std::size_t w = 0; w < n; ++w) image[ch[w]] = static_cast<Vertex>(w);
    mapping.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) mapping[v] = image[cg[v]];
    for (auto [a, b] : g.edges())
      if (!h.has_edge(mapping[a], mapping[b])) return false;
    return true;
  }
  const int fresh = static_cast<int>(2 * n + 1);
  for (std::size_t w = 0; w < n; ++w) {
    if (ch[w] != cg[*target]) continue;
    auto ng = cg, nh = ch;
    ng[*target] = fresh;
    nh[w] = fresh;
    if (match(g, h, refiner, std::move(ng), std::move(nh), mapping)) return true;
  }
  return false;
}

}  // namespace

OracleResult hamiltonian_exact(const Graph& g, std::uint64_t budget) { return HamiltonSearch(g, budget).run(); }

IsomorphismResult isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismLimit || h.order() > kIsomorphismLimit)
    throw_precondition("isomorphism oracle is limited to " + std::to_string(kIsomorphismLimit) + " vertices");
  IsomorphismResult result;
  if (g.order() != h.order() || g.size() != h.size()) return result;
  Refiner refiner(g, h);
  std::vector<int> cg(g.order(), 0), ch(h.order(), 0);
  result.isomorphic = match(g, h, refiner, std::move(cg), std::move(ch), result.mapping);
  if (!result.isomorphic) result.mapping.clear();
  return result;
}

}  // namespace gk
