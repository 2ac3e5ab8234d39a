#include <string>
#include <vector>

#include "doctest.h"
#include "gk/gk.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { gk_string_free(s); }
  json parsed() const { return json::parse(s); }
};

gk_graph* make(const char* family, std::vector<const char*> args) {
  gk_graph* g = nullptr;
  REQUIRE(gk_generate(family, args.data(), args.size(), 0, 0, &g, nullptr) == GK_OK);
  return g;
}

}  // namespace

TEST_CASE("parse, emit and free") {
  gk_graph* g = nullptr;
  const std::string petersen = "IheA@GUAo";
  REQUIRE(gk_graph_parse(petersen.data(), petersen.size(), &g) == GK_OK);
  CHECK(gk_graph_order(g) == 10);
  Owned out;
  REQUIRE(gk_graph_emit(g, "graph6", &out.s) == GK_OK);
  CHECK(std::string(out.s) == petersen);
  Owned bad;
  CHECK(gk_graph_emit(g, "svg", &bad.s) == GK_INPUT_ERROR);
  gk_graph_free(g);

  gk_graph* h = nullptr;
  CHECK(gk_graph_parse("I\x01", 2, &h) == GK_INPUT_ERROR);
  CHECK(h == nullptr);
  CHECK(std::string(gk_last_error()).size() > 0);
  gk_graph_free(nullptr);
}

TEST_CASE("classify statuses") {
  gk_graph* g = make("H", {"3", "2"});
  Owned rep;
  CHECK(gk_classify(g, &rep.s) == GK_OK);
  CHECK(rep.parsed()["verdict"] == "in");
  CHECK(rep.parsed()["k"] == 3);
  gk_graph_free(g);

  gk_graph* p = make("petersen", {});
  Owned out;
  CHECK(gk_classify(p, &out.s) == GK_NOT_MEMBER);
  REQUIRE(out.s != nullptr);
  CHECK(out.parsed()["verdict"] == "out");
  Owned ham;
  CHECK(gk_hamilton(p, 10000000, &ham.s) == GK_NOT_MEMBER);
  gk_graph_free(p);
}

TEST_CASE("hamilton and hamiltonize") {
  gk_graph* g = make("H", {"3", "2"});
  Owned cert;
  REQUIRE(gk_hamilton(g, 10000000, &cert.s) == GK_OK);
  CHECK(cert.parsed()["provenance"] == "structural");
  CHECK(cert.parsed()["cycle"].size() == 8);
  gk_graph_free(g);

  gk_graph* d = make("D", {"2", "6", "0"});
  Owned tr;
  REQUIRE(gk_hamiltonize(d, 0, &tr.s) == GK_OK);
  CHECK(tr.parsed()["cycle"].size() == 48);
  gk_graph_free(d);

  gk_graph* k7 = make("complete", {"7"});
  Owned step;
  REQUIRE(gk_extend(k7, "[0,1,2]", 0, &step.s) == GK_OK);
  CHECK(step.parsed()["after"].size() >= 4);
  Owned bad;
  CHECK(gk_extend(k7, "[0,1]", 0, &bad.s) == GK_INPUT_ERROR);
  gk_graph_free(k7);
}

TEST_CASE("oracle budget status") {
  gk_graph* p = make("petersen", {});
  Owned r;
  CHECK(gk_oracle(p, 5, &r.s) == GK_BUDGET_EXCEEDED);
  CHECK(r.parsed()["outcome"] == "budget-exceeded");
  Owned full;
  CHECK(gk_oracle(p, 10000000, &full.s) == GK_OK);
  CHECK(full.parsed()["outcome"] == "not-hamiltonian");
  gk_graph_free(p);
}

TEST_CASE("generate with layout and validate") {
  gk_graph* g = nullptr;
  Owned layout;
  const char* args[] = {"6", "2", "2", "2"};
  REQUIRE(gk_generate("counterexample", args, 4, 0, 0, &g, &layout.s) == GK_OK);
  CHECK(gk_graph_order(g) == 54);
  CHECK(layout.parsed().is_array());
  Owned rep;
  REQUIRE(gk_validate("counterexample", args, 4, 0, 0, g, &rep.s) == GK_OK);
  CHECK(rep.parsed()["ok"] == true);
  gk_graph_free(g);

  gk_graph* none = nullptr;
  CHECK(gk_generate("nosuch", nullptr, 0, 0, 0, &none, nullptr) == GK_INPUT_ERROR);
  CHECK(none == nullptr);
}

TEST_CASE("reduce and map cycles") {
  gk_graph* q = make("cube", {});
  gk_graph* r = nullptr;
  Owned map;
  REQUIRE(gk_reduce(q, &r, &map.s) == GK_OK);
  CHECK(gk_graph_order(r) == 52);

  Owned orc;
  REQUIRE(gk_oracle(q, 10000000, &orc.s) == GK_OK);
  const std::string src = orc.parsed()["cycle"].dump();
  Owned f2;
  REQUIRE(gk_map_forward(q, map.s, src.c_str(), &f2.s) == GK_OK);
  CHECK(f2.parsed()["cycle"].size() == 52);
  const std::string reduced = f2.parsed()["cycle"].dump();
  Owned back;
  REQUIRE(gk_map_backward(map.s, reduced.c_str(), &back.s) == GK_OK);
  CHECK(back.parsed()["cycle"].size() == 8);

  Owned bad;
  CHECK(gk_map_backward(map.s, "[0,1,2]", &bad.s) == GK_INPUT_ERROR);
  gk_graph* k4 = make("complete", {"4"});
  gk_graph* none = nullptr;
  Owned m2;
  CHECK(gk_reduce(k4, &none, &m2.s) == GK_INPUT_ERROR);
  gk_graph_free(k4);
  gk_graph_free(r);
  gk_graph_free(q);
}

TEST_CASE("isomorphism through the C API") {
  gk_graph* a = make("G", {"3", "2"});
  gk_graph* b = make("H", {"3", "2"});
  Owned r;
  REQUIRE(gk_iso(a, b, &r.s) == GK_OK);
  CHECK(r.parsed()["isomorphic"] == true);
  gk_graph_free(a);
  gk_graph_free(b);
}
