// Command-line front end; talks to the library only through gk.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gk/gk.h"

namespace {

struct GraphDeleter {
  void operator()(gk_graph* g) const { gk_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gk_graph, GraphDeleter>;

struct Failure {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{GK_INPUT_ERROR, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{GK_INPUT_ERROR, "cannot write " + path};
  out << text << '\n';
}

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  gk_string_free(s);
  return out;
}

void check(gk_status st) {
  if (st != GK_OK) throw Failure{st, gk_last_error()};
}

GraphPtr load(const std::string& path) {
  const std::string text = slurp(path);
  gk_graph* g = nullptr;
  check(gk_graph_parse(text.data(), text.size(), &g));
  return GraphPtr(g);
}

// Prints JSON output (if any) and then reports the status. `json` is read after
// the call that fills it, hence the reference.
int finish(gk_status st, char*& json) {
  std::string out = take(json);
  if (!out.empty()) std::cout << out << '\n';
  if (st != GK_OK) std::cerr << "gk: " << gk_last_error() << '\n';
  return st;
}

void print_graph(const std::string& text) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

std::vector<const char*> c_args(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity tools for regular graphs with small second neighborhoods"};
  app.require_subcommand(1);

  std::string input = "-", input2, format = "graph6", cycle_path, map_path, layout_path, graph_path;
  std::uint64_t budget = 10'000'000, seed = 0;
  bool allow_small_k = false, extended = false;
  std::string family;
  std::vector<std::string> params;

  auto* classify = app.add_subcommand("classify", "membership report with per-vertex second neighborhoods");
  auto* hamilton = app.add_subcommand("hamilton", "Hamilton certificate for members with k <= 5");
  auto* extend = app.add_subcommand("extend", "extend a cycle by one or two vertices");
  auto* hamiltonize = app.add_subcommand("hamiltonize", "grow a triangle into a Hamilton cycle");
  auto* generate = app.add_subcommand("generate", "build a family member");
  auto* reduce = app.add_subcommand("reduce", "cubic bipartite graph to a 6-regular member");
  auto* forward = app.add_subcommand("map-forward", "map a source Hamilton cycle to the reduced graph");
  auto* backward = app.add_subcommand("map-backward", "map a reduced Hamilton cycle back to the source");
  auto* oracle = app.add_subcommand("oracle", "exact Hamiltonicity search");
  auto* validate = app.add_subcommand("validate", "check a family's claimed properties");
  auto* iso = app.add_subcommand("iso", "isomorphism test");

  for (auto* sub : {classify, hamilton, extend, hamiltonize, reduce, oracle})
    sub->add_option("input", input, "graph6 or edge JSON file; '-' for stdin");
  for (auto* sub : {hamilton, oracle}) sub->add_option("--budget", budget, "search node budget");
  for (auto* sub : {extend, hamiltonize}) sub->add_flag("--allow-small-k", allow_small_k, "admit 3 <= k < 6");
  extend->add_option("--cycle", cycle_path, "cycle JSON file")->required();
  for (auto* sub : {generate, validate}) {
    sub->add_option("family", family, "family name")->required();
    sub->add_option("params", params, "family parameters");
    sub->add_option("--seed", seed, "seed for randomized families");
    sub->add_flag("--extended", extended, "admit the extended parameter range");
  }
  for (auto* sub : {generate, reduce})
    sub->add_option("--format", format, "graph6, json or dot")->check(CLI::IsMember({"graph6", "g6", "json", "dot"}));
  generate->add_option("--layout", layout_path, "write the named vertex sets as JSON");
  reduce->add_option("--map", map_path, "write the gadget map as JSON");
  forward->add_option("--graph", graph_path, "source graph")->required();
  for (auto* sub : {forward, backward}) {
    sub->add_option("--map", map_path, "gadget map JSON")->required();
    sub->add_option("--cycle", cycle_path, "cycle JSON")->required();
  }
  validate->add_option("--input", graph_path, "validate this graph instead of the generated one");
  iso->add_option("first", input, "first graph")->required();
  iso->add_option("second", input2, "second graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GK_INPUT_ERROR;
  }

  try {
    char* json = nullptr;
    if (*classify) {
      auto g = load(input);
      return finish(gk_classify(g.get(), &json), json);
    }
    if (*hamilton) {
      auto g = load(input);
      return finish(gk_hamilton(g.get(), budget, &json), json);
    }
    if (*extend) {
      auto g = load(input);
      const std::string cycle = slurp(cycle_path);
      return finish(gk_extend(g.get(), cycle.c_str(), allow_small_k, &json), json);
    }
    if (*hamiltonize) {
      auto g = load(input);
      return finish(gk_hamiltonize(g.get(), allow_small_k, &json), json);
    }
    if (*oracle) {
      auto g = load(input);
      return finish(gk_oracle(g.get(), budget, &json), json);
    }
    if (*iso) {
      auto g = load(input);
      auto h = load(input2);
      return finish(gk_iso(g.get(), h.get(), &json), json);
    }
    if (*generate) {
      auto args = c_args(params);
      gk_graph* raw = nullptr;
      char* layout = nullptr;
      check(gk_generate(family.c_str(), args.data(), args.size(), seed, extended, &raw,
                        layout_path.empty() ? nullptr : &layout));
      GraphPtr g(raw);
      if (!layout_path.empty()) spit(layout_path, take(layout));
      char* text = nullptr;
      check(gk_graph_emit(g.get(), format.c_str(), &text));
      print_graph(take(text));
      return 0;
    }
    if (*validate) {
      auto args = c_args(params);
      GraphPtr candidate;
      if (!graph_path.empty()) candidate = load(graph_path);
      return finish(gk_validate(family.c_str(), args.data(), args.size(), seed, extended, candidate.get(), &json), json);
    }
    if (*reduce) {
      auto g = load(input);
      gk_graph* raw = nullptr;
      char* map = nullptr;
      check(gk_reduce(g.get(), &raw, &map));
      GraphPtr out(raw);
      std::string map_text = take(map);
      if (!map_path.empty()) spit(map_path, map_text);
      char* text = nullptr;
      check(gk_graph_emit(out.get(), format.c_str(), &text));
      print_graph(take(text));
      return 0;
    }
    if (*forward) {
      auto g = load(graph_path);
      const std::string map = slurp(map_path), cycle = slurp(cycle_path);
      return finish(gk_map_forward(g.get(), map.c_str(), cycle.c_str(), &json), json);
    }
    if (*backward) {
      const std::string map = slurp(map_path), cycle = slurp(cycle_path);
      return finish(gk_map_backward(map.c_str(), cycle.c_str(), &json), json);
    }
  } catch (const Failure& f) {
    std::cerr << "gk: " << f.message << '\n';
    return f.code;
  }
  return GK_INPUT_ERROR;
}
