#include "gk/gk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gk/io.hpp"
#include "gk/reduction.hpp"
#include "gk/report.hpp"

struct gk_graph {
  gk::Graph g;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gk_status status_of(gk::ErrorKind kind) {
  switch (kind) {
    case gk::ErrorKind::not_member:
      return GK_NOT_MEMBER;
    case gk::ErrorKind::budget_exceeded:
      return GK_BUDGET_EXCEEDED;
    case gk::ErrorKind::internal_contradiction:
      return GK_INTERNAL_CONTRADICTION;
    case gk::ErrorKind::input:
    case gk::ErrorKind::precondition:
      break;
  }
  return GK_INPUT_ERROR;
}

template <class F>
gk_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const gk::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return GK_INPUT_ERROR;
}

void need(const void* p, const char* what) {
  if (!p) gk::throw_input(std::string(what) + " is null");
}

gk::FamilyRequest request(const char* family, const char* const* args, size_t nargs, uint64_t seed, int extended) {
  need(family, "family");
  gk::FamilyRequest r;
  r.family = family;
  for (size_t i = 0; i < nargs; ++i) {
    need(args[i], "family argument");
    r.args.emplace_back(args[i]);
  }
  r.seed = seed;
  r.extended = extended != 0;
  return r;
}

gk::Json cycle_json(const gk::Cycle& c) { return gk::Json{{"cycle", gk::to_json(c)}}; }

}  // namespace

extern "C" {

void gk_string_free(char* s) { std::free(s); }

const char* gk_last_error(void) { return last_error.c_str(); }

gk_status gk_graph_parse(const char* text, size_t len, gk_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new gk_graph{gk::parse_graph(std::string_view(text, len))};
    return GK_OK;
  });
}

void gk_graph_free(gk_graph* g) { delete g; }

size_t gk_graph_order(const gk_graph* g) { return g ? g->g.order() : 0; }

gk_status gk_graph_emit(const gk_graph* g, const char* format, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(format, "format");
    need(out, "out");
    *out = dup(gk::emit_graph(g->g, gk::parse_format(format)));
    return GK_OK;
  });
}

gk_status gk_classify(const gk_graph* g, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(json_out, "out");
    auto report = gk::classify(g->g);
    auto j = gk::to_json(report);
    if (report.connected && report.k) j["predicates"] = gk::to_json(gk::membership_predicates(g->g, *report.k));
    *json_out = dup(j.dump());
    if (!report.member) {
      last_error = "not a member: " + report.reason;
      return GK_NOT_MEMBER;
    }
    return GK_OK;
  });
}

gk_status gk_hamilton(const gk_graph* g, uint64_t budget, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(json_out, "out");
    *json_out = dup(gk::to_json(gk::hamilton_small_k(g->g, budget)).dump());
    return GK_OK;
  });
}

gk_status gk_extend(const gk_graph* g, const char* cycle, int allow_small_k, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(cycle, "cycle");
    need(json_out, "out");
    gk::ExtensionOptions opt{allow_small_k != 0};
    *json_out = dup(gk::to_json(gk::extend_cycle(g->g, gk::cycle_from_json(cycle), opt)).dump());
    return GK_OK;
  });
}

gk_status gk_hamiltonize(const gk_graph* g, int allow_small_k, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(json_out, "out");
    gk::ExtensionOptions opt{allow_small_k != 0};
    *json_out = dup(gk::to_json(gk::hamiltonize(g->g, opt)).dump());
    return GK_OK;
  });
}

gk_status gk_oracle(const gk_graph* g, uint64_t budget, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(json_out, "out");
    auto r = gk::hamiltonian_exact(g->g, budget);
    *json_out = dup(gk::to_json(r).dump());
    if (r.outcome == gk::OracleOutcome::budget_exceeded) {
      last_error = "oracle budget of " + std::to_string(budget) + " nodes exceeded";
      return GK_BUDGET_EXCEEDED;
    }
    return GK_OK;
  });
}

gk_status gk_iso(const gk_graph* g, const gk_graph* h, char** json_out) {
  return guarded([&] {
    need(g, "graph");
    need(h, "graph");
    need(json_out, "out");
    *json_out = dup(gk::to_json(gk::isomorphic(g->g, h->g)).dump());
    return GK_OK;
  });
}

gk_status gk_generate(const char* family, const char* const* args, size_t nargs, uint64_t seed, int extended,
                      gk_graph** out, char** layout_json) {
  return guarded([&] {
    need(out, "out");
    auto gen = gk::generate(request(family, args, nargs, seed, extended));
    if (layout_json) *layout_json = dup(gk::to_json(gen.layout).dump());
    *out = new gk_graph{std::move(gen.graph)};
    return GK_OK;
  });
}

gk_status gk_validate(const char* family, const char* const* args, size_t nargs, uint64_t seed, int extended,
                      const gk_graph* candidate, char** json_out) {
  return guarded([&] {
    need(json_out, "out");
    auto r = request(family, args, nargs, seed, extended);
    auto claims = gk::family_claims(r);
    auto report = candidate ? gk::validate_family(candidate->g, claims) : gk::validate_family(gk::generate(r).graph, claims);
    *json_out = dup(gk::to_json(report).dump());
    return GK_OK;
  });
}

gk_status gk_reduce(const gk_graph* g, gk_graph** out, char** map_json) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto red = gk::reduce(g->g);
    if (map_json) *map_json = dup(gk::map_to_json(red.map));
    *out = new gk_graph{std::move(red.graph)};
    return GK_OK;
  });
}

gk_status gk_map_forward(const gk_graph* source, const char* map, const char* cycle, char** json_out) {
  return guarded([&] {
    need(source, "graph");
    need(map, "map");
    need(cycle, "cycle");
    need(json_out, "out");
    auto m = gk::map_from_json(map);
    *json_out = dup(cycle_json(gk::forward_cycle(source->g, gk::cycle_from_json(cycle), m)).dump());
    return GK_OK;
  });
}

gk_status gk_map_backward(const char* map, const char* cycle, char** json_out) {
  return guarded([&] {
    need(map, "map");
    need(cycle, "cycle");
    need(json_out, "out");
    auto m = gk::map_from_json(map);
    *json_out = dup(cycle_json(gk::backward_cycle(gk::cycle_from_json(cycle), m)).dump());
    return GK_OK;
  });
}

}  // extern "C"
