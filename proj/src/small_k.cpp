#include "gk/small_k.hpp"

#include <algorithm>
#include <set>

#include "gk/membership.hpp"

namespace gk {
namespace {

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

std::string vstr(Vertex v) { return std::to_string(v); }

// Neighbors of x outside the sorted set s.
VertexSet outside(const Graph& g, Vertex x, const VertexSet& s) {
  VertexSet out;
  for (Vertex y : g.neighbors(x))
    if (!contains(s, y)) out.push_back(y);
  return out;
}

void require_clique(const Graph& g, const VertexSet& s, const std::string& what) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) throw_contradiction(what + " is not a clique");
}

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Vertices adjacent to every member of s, excluding s and `except`.
VertexSet common_outside(const Graph& g, const VertexSet& s, const VertexSet& except) {
  VertexSet out;
  for (Vertex y : g.neighbors(s.front())) {
    if (contains(s, y) || contains(except, y)) continue;
    if (std::all_of(s.begin(), s.end(), [&](Vertex x) { return g.has_edge(x, y); })) out.push_back(y);
  }
  return out;
}

Segment peel_h(const Graph& g, Vertex entry, const VertexSet& side) {
  VertexSet w;
  for (Vertex x : side)
    if (g.has_edge(entry, x)) w.push_back(x);
  auto rest = minus(side, w);
  if (rest.size() != 1) throw_contradiction("H segment at " + vstr(entry) + " has no unique partner");
  const Vertex partner = rest.front();
  require_clique(g, side, "H segment at " + vstr(entry));
  VertexSet closed = side;
  closed.push_back(entry);
  closed = sorted(closed);
  auto next = outside(g, partner, closed);
  if (next.size() != 1) throw_contradiction("partner " + vstr(partner) + " does not have a unique exit");
  Segment seg{SegmentKind::H, entry, next.front(), w};
  seg.slots.push_back(partner);
  return seg;
}

Segment peel_g(const Graph& g, Vertex entry, const VertexSet& side) {
  VertexSet w;
  for (Vertex x : side)
    if (g.has_edge(entry, x)) w.push_back(x);
  auto z = minus(side, w);
  require_clique(g, side, "G segment at " + vstr(entry));
  VertexSet except = side;
  except.push_back(entry);
  auto exit = common_outside(g, z, sorted(except));
  if (exit.size() != 1 || w.size() != 2 || z.size() != 3)
    throw_contradiction("G segment at " + vstr(entry) + " has no unique exit");
  Segment seg{SegmentKind::G, entry, exit.front(), w};
  seg.slots.insert(seg.slots.end(), z.begin(), z.end());
  return seg;
}

// Identifies which of T1..T4 starts at `entry` with first half `side`.
Segment peel_t(const Graph& g, Vertex entry, const VertexSet& side) {
  const std::string at = "part at " + vstr(entry);
  VertexSet w;
  for (Vertex x : side)
    if (g.has_edge(entry, x)) w.push_back(x);
  auto u = minus(side, w);
  if (w.size() != 2 || u.size() != 2) throw_contradiction(at + " is not split 2/2");
  VertexSet seen = side;
  seen.push_back(entry);
  seen = sorted(seen);

  Segment seg;
  seg.entry = entry;
  seg.slots = {w[0], w[1], u[0], u[1]};
  auto finish = [&](const VertexSet& last) {
    auto exit = common_outside(g, last, seen);
    if (exit.size() != 1) throw_contradiction(at + " has no unique exit");
    seg.exit = exit.front();
  };

  if (g.has_edge(u[0], u[1])) {
    auto o0 = outside(g, u[0], seen), o1 = outside(g, u[1], seen);
    if (o0.size() != 1 || o1.size() != 1) throw_contradiction(at + " has irregular u vertices");
    if (o0 == o1) {
      seg.kind = SegmentKind::T1;
      seg.exit = o0.front();
      return seg;
    }
    // T2: u_i - x_i, x1x2 edge, x's complete to a y-pair.
    const Vertex x1 = o0.front(), x2 = o1.front();
    if (!g.has_edge(x1, x2)) throw_contradiction(at + " looks like T2 but x1x2 is missing");
    seen.push_back(x1);
    seen.push_back(x2);
    seen = sorted(seen);
    auto y = common_outside(g, sorted({x1, x2}), seen);
    if (y.size() != 2 || !g.has_edge(y[0], y[1])) throw_contradiction(at + " looks like T2 but has no y pair");
    seg.kind = SegmentKind::T2;
    seg.slots.insert(seg.slots.end(), {x1, x2, y[0], y[1]});
    seen.insert(seen.end(), y.begin(), y.end());
    seen = sorted(seen);
    finish(y);
    return seg;
  }

  auto x = common_outside(g, u, seen);
  if (x.size() != 2) throw_contradiction(at + " has u vertices without a common pair");
  seen.insert(seen.end(), x.begin(), x.end());
  seen = sorted(seen);
  seg.slots.insert(seg.slots.end(), x.begin(), x.end());
  if (g.has_edge(x[0], x[1])) {
    seg.kind = SegmentKind::T3;
    finish(x);
    return seg;
  }
  auto y = common_outside(g, x, seen);
  if (y.size() != 2 || !g.has_edge(y[0], y[1])) throw_contradiction(at + " looks like T4 but has no y pair");
  seg.kind = SegmentKind::T4;
  seg.slots.insert(seg.slots.end(), y.begin(), y.end());
  seen.insert(seen.end(), y.begin(), y.end());
  seen = sorted(seen);
  finish(y);
  return seg;
}

PartTag part_of(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::T1:
      return PartTag::T1;
    case SegmentKind::T2:
      return PartTag::T2;
    case SegmentKind::T3:
      return PartTag::T3;
    case SegmentKind::T4:
      return PartTag::T4;
    default:
      throw_input("segment is not a part");
  }
}

bool is_part(SegmentKind kind) { return kind != SegmentKind::H && kind != SegmentKind::G; }

// Slots of the segment's last vertex before the exit, which lie on the exit's
// side facing back along the walk.
VertexSet trailing_slots(const Segment& seg) {
  switch (seg.kind) {
    case SegmentKind::H:
      return {seg.slots.back()};
    case SegmentKind::G:
      return sorted({seg.slots[2], seg.slots[3], seg.slots[4]});
    default:
      return sorted({seg.slots[seg.slots.size() - 2], seg.slots.back()});
  }
}

}  // namespace

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::H:
      return "H";
    case SegmentKind::G:
      return "G";
    case SegmentKind::T1:
      return "T1";
    case SegmentKind::T2:
      return "T2";
    case SegmentKind::T3:
      return "T3";
    case SegmentKind::T4:
      return "T4";
  }
  return "?";
}

std::string_view to_string(FormVariant variant) {
  switch (variant) {
    case FormVariant::h_form:
      return "H";
    case FormVariant::g_form:
      return "G";
    case FormVariant::f4_sequence:
      return "F4";
    case FormVariant::all_balls_2connected:
      return "all-balls-2-connected";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::structural:
      return "structural";
    case Provenance::oracle:
      return "oracle";
    case Provenance::cycle_graph:
      return "cycle-graph";
  }
  return "?";
}

std::vector<std::string> canonical_cyclic(std::vector<std::string> tags) {
  if (tags.empty()) return tags;
  std::vector<std::string> best = tags;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < tags.size(); ++r) {
      std::rotate(tags.begin(), tags.begin() + 1, tags.end());
      best = std::min(best, tags);
    }
    std::reverse(tags.begin(), tags.end());
  }
  return best;
}

std::vector<std::string> CanonicalForm::canonical_tags() const {
  std::vector<std::string> tags;
  for (const auto& s : segments) tags.emplace_back(to_string(s.kind));
  return canonical_cyclic(std::move(tags));
}

Graph graph_of_form(const CanonicalForm& form, std::size_t order) {
  GraphBuilder b(order);
  for (const auto& seg : form.segments) {
    switch (seg.kind) {
      case SegmentKind::H: {
        VertexSet w(seg.slots.begin(), seg.slots.end() - 1);
        const Vertex partner = seg.slots.back();
        b.add_clique(w);
        for (Vertex x : w) {
          b.add_edge(seg.entry, x);
          b.add_edge(partner, x);
        }
        b.add_edge(partner, seg.exit);
        break;
      }
      case SegmentKind::G: {
        b.add_clique(seg.slots);
        b.add_edge(seg.entry, seg.slots[0]);
        b.add_edge(seg.entry, seg.slots[1]);
        for (int i = 2; i < 5; ++i) b.add_edge(seg.exit, seg.slots[i]);
        break;
      }
      default: {
        const PartTag tag = part_of(seg.kind);
        std::vector<Vertex> local{seg.entry};
        local.insert(local.end(), seg.slots.begin(), seg.slots.end());
        local.push_back(seg.exit);
        for (auto [x, y] : part_edges(tag)) b.add_edge(local[x], local[y]);
      }
    }
  }
  return b.build();
}

CanonicalForm decompose(const Graph& g) {
  auto report = classify(g);
  if (!report.member) throw Error(ErrorKind::not_member, "decompose requires a member graph: " + report.reason);
  const std::size_t k = *report.k;
  if (k < 3 || k > 5) throw_precondition("decompose handles k in {3,4,5}, got k = " + std::to_string(k));

  CanonicalForm form;
  form.k = k;
  std::optional<Vertex> start;
  for (std::size_t v = 0; v < g.order() && !start; ++v)
    if (is_own_ball_cut_vertex(g, static_cast<Vertex>(v))) start = static_cast<Vertex>(v);
  if (!start) {
    if (auto w = find_ball2_cut_vertex(g))
      throw_contradiction("vertex " + vstr(w->cut) + " cuts the ball around " + vstr(w->center) +
                          " but no vertex cuts its own ball");
    form.variant = FormVariant::all_balls_2connected;
    return form;
  }

  Vertex cur = *start;
  while (true) {
    auto profile = cut_vertex_profile(g, cur);
    if (!profile) throw_contradiction("hinge " + vstr(cur) + " does not cut its radius-2 ball");
    auto [a, b] = profile->neighbor_split;
    const VertexSet* side = nullptr;
    if (form.segments.empty()) {
      if (a == 1 || b == 1)
        side = a == 1 ? &profile->second : &profile->first;
      else if (k == 5)
        side = a == 2 ? &profile->first : &profile->second;
      else
        side = &profile->first;
    } else {
      auto back = trailing_slots(form.segments.back());
      side = contains(profile->first, back.front()) ? &profile->second : &profile->first;
    }
    const std::size_t facing = side == &profile->first ? a : b;

    // Split 1/(k-1) is examined before 2/2 (k = 4) or 2/3 (k = 5).
    Segment seg;
    if (a == 1 || b == 1) {
      if (facing != k - 1) throw_contradiction("hinge " + vstr(cur) + " is entered from its wide side");
      seg = peel_h(g, cur, *side);
    } else if (k == 5 && facing == 2) {
      seg = peel_g(g, cur, *side);
    } else if (k == 4 && a == 2) {
      seg = peel_t(g, cur, *side);
    } else {
      throw_contradiction("hinge " + vstr(cur) + " has an unexpected split " + std::to_string(a) + "/" +
                          std::to_string(b));
    }
    if (!form.segments.empty() && (seg.kind == SegmentKind::H) != (form.segments.back().kind == SegmentKind::H))
      throw_contradiction("ambiguous form: segment kinds " + std::string(to_string(form.segments.back().kind)) +
                          " and " + std::string(to_string(seg.kind)) + " are mixed");
    if (!form.segments.empty() && (seg.kind == SegmentKind::G) != (form.segments.back().kind == SegmentKind::G))
      throw_contradiction("ambiguous form: G and non-G segments are mixed");
    form.segments.push_back(seg);
    form.hinges.push_back(cur);
    cur = seg.exit;
    if (cur == *start) break;
    if (form.segments.size() > g.order()) throw_contradiction("segment walk does not close");
  }
  if (form.segments.size() < 2) throw_contradiction("segment walk closed after a single segment");

  const auto kind = form.segments.front().kind;
  form.variant = kind == SegmentKind::H   ? FormVariant::h_form
                 : kind == SegmentKind::G ? FormVariant::g_form
                                          : FormVariant::f4_sequence;

  std::vector<int> seen(g.order(), 0);
  for (const auto& s : form.segments) {
    ++seen[s.entry];
    for (Vertex x : s.slots) ++seen[x];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw_contradiction("segments do not partition the vertex set");
  if (!(graph_of_form(form, g.order()) == g)) throw_contradiction("graph differs from its recognized form");
  return form;
}

Cycle hamilton_from_form(const CanonicalForm& form, const Graph& g) {
  if (form.variant == FormVariant::all_balls_2connected || form.segments.empty())
    throw_input("form has no segments to thread");
  Cycle c;
  for (const auto& seg : form.segments) {
    c.vertices.push_back(seg.entry);
    if (is_part(seg.kind)) {
      for (int i : part_path_template(part_of(seg.kind))) c.vertices.push_back(seg.slots.at(static_cast<std::size_t>(i)));
    } else {
      c.vertices.insert(c.vertices.end(), seg.slots.begin(), seg.slots.end());
    }
  }
  if (!is_hamiltonian_cycle(g, c)) throw_input("form does not describe this graph");
  return c;
}

HamCertificate hamilton_small_k(const Graph& g, std::uint64_t budget) {
  auto report = classify(g);
  if (!report.member) throw Error(ErrorKind::not_member, "graph is not a member: " + report.reason);
  const std::size_t k = *report.k;
  if (k < 2 || k > 5) throw_precondition("small-k Hamiltonicity handles k in {2,...,5}, got k = " + std::to_string(k));

  HamCertificate cert;
  if (k == 2) {
    cert.provenance = Provenance::cycle_graph;
    Vertex prev = -1, cur = 0;
    do {
      cert.cycle.vertices.push_back(cur);
      const auto& nb = g.neighbors(cur);
      Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != 0);
  } else {
    auto form = decompose(g);
    if (form.variant == FormVariant::all_balls_2connected) {
      auto res = hamiltonian_exact(g, budget);
      cert.oracle_nodes = res.nodes;
      if (res.outcome == OracleOutcome::budget_exceeded)
        throw Error(ErrorKind::budget_exceeded, "oracle budget of " + std::to_string(budget) + " nodes exceeded");
      if (res.outcome == OracleOutcome::not_hamiltonian)
        throw_contradiction("oracle proved a member with k = " + std::to_string(k) + " non-Hamiltonian");
      cert.provenance = Provenance::oracle;
      cert.cycle = *res.cycle;
    } else {
      cert.provenance = Provenance::structural;
      cert.cycle = hamilton_from_form(form, g);
    }
    cert.form = std::move(form);
  }
  if (!is_hamiltonian_cycle(g, cert.cycle)) throw_contradiction("certificate failed validation");
  return cert;
}

}  // namespace gk
