#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauerlab/oracle_a.hpp"
#include "brauerlab/rewrite.hpp"

using namespace brauerlab;

namespace {

Word w(const std::string& s, int max_node) { return parse_word(s, max_node); }

}  // namespace

TEST_CASE("diagram counts are double factorials") {
  CHECK(diagram_count(1) == 1);
  CHECK(diagram_count(2) == 3);
  CHECK(diagram_count(3) == 15);
  CHECK(diagram_count(4) == 105);
  CHECK(diagram_count(5) == 945);
  CHECK(diagram_count(6) == 10395);
}

TEST_CASE("generator diagrams and basic relations") {
  int m = 4;
  BrauerDiagram id = identity_diagram(m);
  CHECK(id.loops == 0);
  CHECK(compose(id, id) == id);

  BrauerDiagram r2 = r_diagram(m, 2);
  CHECK(compose(r2, r2) == id);

  BrauerDiagram e2 = e_diagram(m, 2);
  BrauerDiagram ee = compose(e2, e2);
  CHECK(ee.loops == 1);  // e^2 = delta e
  CHECK(BrauerDiagram{ee.m, ee.pairs, 0} == e2);

  // braid relation on diagrams
  BrauerDiagram r1 = r_diagram(m, 1);
  CHECK(compose(compose(r1, r2), r1) == compose(compose(r2, r1), r2));
  // e r e = e for adjacent strands
  BrauerDiagram e1 = e_diagram(m, 1);
  CHECK(compose(compose(e1, r2), e1) == e1);
  // distant generators commute
  BrauerDiagram r3 = r_diagram(m, 3);
  CHECK(compose(r1, r3) == compose(r3, r1));
}

TEST_CASE("eval_word_A carries the delta ledger into loops") {
  Word v = w("e1 e1", 3);
  BrauerDiagram d = eval_word_A(3, v);
  CHECK(d.loops == 1);
  v.delta = 2;
  CHECK(eval_word_A(3, v).loops == 3);
  CHECK(eval_word_A(3, Word{}) == identity_diagram(3));
}

TEST_CASE("frozen evaluation: e1 r2 e1 on three strands") {
  // independently derived by composing matchings by hand
  BrauerDiagram d = eval_word_A(3, w("e1 r2 e1", 3));
  CHECK(diagram_to_json(d) ==
        R"({"loops":0,"m":3,"pairs":[["t1","t2"],["t3","b3"],["b1","b2"]]})");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(17);
  for (int it = 0; it < 50; ++it) {
    Word v;
    for (int i = 0; i < 12; ++i) {
      int node = 1 + (int)(rng() % 4);
      v.tokens.push_back(rng() % 2 ? tok_r(node) : tok_e(node));
    }
    BrauerDiagram d = eval_word_A(5, v);
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
  }
}

TEST_CASE("every rewrite rule application preserves the diagram") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("A4"));
  std::mt19937 rng(23);
  for (int it = 0; it < 400; ++it) {
    Word v;
    int L = rng() % 16;
    for (int i = 0; i < L; ++i) {
      int node = 1 + (int)(rng() % 4);
      v.tokens.push_back(rng() % 2 ? tok_r(node) : tok_e(node));
    }
    BrauerDiagram ref = eval_word_A(5, v);
    for (const RuleMatch& m : find_matches(sys, v))
      CHECK(eval_word_A(5, apply_rule_at(sys, v, m)) == ref);
  }
}

TEST_CASE("reduce preserves the diagram with exact delta ledger") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("A5"));
  std::mt19937 rng(29);
  SearchCaps caps;
  caps.max_extra_length = 4;
  for (int it = 0; it < 300; ++it) {
    Word v;
    int L = rng() % 21;
    for (int i = 0; i < L; ++i) {
      int node = 1 + (int)(rng() % 5);
      v.tokens.push_back(rng() % 2 ? tok_r(node) : tok_e(node));
    }
    ReduceResult rr = reduce(sys, v, caps);
    CHECK(eval_word_A(6, rr.word) == eval_word_A(6, v));
  }
}
