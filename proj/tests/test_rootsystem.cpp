#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauerlab/rootsystem.hpp"

using namespace brauerlab;

TEST_CASE("diagram construction and adjacency") {
  CoxeterDiagram a4 = CoxeterDiagram::parse("A4");
  CHECK(a4.n == 4);
  CHECK(a4.adjacent(1, 2));
  CHECK(a4.adjacent(3, 4));
  CHECK(!a4.adjacent(1, 3));

  CoxeterDiagram d5 = CoxeterDiagram::parse("D5");
  CHECK(d5.adjacent(3, 5));  // branch node n attached at n-2
  CHECK(d5.adjacent(3, 4));
  CHECK(!d5.adjacent(4, 5));

  CoxeterDiagram e6 = CoxeterDiagram::parse("E6");
  CHECK(e6.adjacent(1, 3));
  CHECK(e6.adjacent(2, 4));
  CHECK(e6.adjacent(5, 6));
  CHECK(!e6.adjacent(1, 2));
  CHECK(!e6.adjacent(2, 3));

  CHECK(CoxeterDiagram::parse("E7").adjacent(6, 7));
  CHECK(CoxeterDiagram::parse("E8").adjacent(7, 8));
  CHECK_THROWS(CoxeterDiagram::parse("B3"));
  CHECK_THROWS(CoxeterDiagram::parse("E9"));
}

TEST_CASE("positive root counts and highest heights") {
  struct Row {
    const char* type;
    int count;
    int top;
  };
  // counts n(n+1)/2 for An, n(n-1) for Dn; E data standard
  for (Row row : std::initializer_list<Row>{{"A4", 10, 4},
                                            {"D4", 12, 5},
                                            {"D5", 20, 7},
                                            {"E6", 36, 11},
                                            {"E7", 63, 17},
                                            {"E8", 120, 29}}) {
    RootSystem sys = build_root_system(CoxeterDiagram::parse(row.type));
    CHECK(sys.num_roots() == row.count);
    CHECK(sys.height_idx(sys.num_roots() - 1) == row.top);
  }
}

TEST_CASE("roots sorted by height then lex, all of norm 2") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("E6"));
  for (int i = 0; i + 1 < sys.num_roots(); ++i) {
    int ha = sys.height_idx(i), hb = sys.height_idx(i + 1);
    CHECK(ha <= hb);
    if (ha == hb) CHECK(sys.positive_roots[i] < sys.positive_roots[i + 1]);
  }
  for (int i = 0; i < sys.num_roots(); ++i) CHECK(sys.inner_idx(i, i) == 2);
}

TEST_CASE("reflection tables are involutive and height-consistent") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("D5"));
  for (int node = 1; node <= sys.rank(); ++node)
    for (int a = 0; a < sys.num_roots(); ++a) {
      int b = sys.reflect_simple_idx(node, a);
      CHECK(b >= 0);
      CHECK(sys.reflect_simple_idx(node, b) == a);
      int s = sys.simple_index(node);
      int expected = sys.height_idx(a) - sys.inner_idx(s, a);
      if (a == s)
        CHECK(b == s);  // alpha_i maps to -alpha_i, stored positively
      else
        CHECK(sys.height_idx(b) == expected);
    }
}

TEST_CASE("inner products match the Cartan matrix on simples") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("E7"));
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      int v = sys.inner_idx(sys.simple_index(i), sys.simple_index(j));
      if (i == j)
        CHECK(v == 2);
      else
        CHECK(v == (sys.diagram.adjacent(i, j) ? -1 : 0));
    }
}

TEST_CASE("root parsing and printing") {
  RootSystem sys = build_root_system(CoxeterDiagram::parse("A3"));
  Root a2 = parse_root(sys, "a2");
  CHECK(a2 == Root{0, 1, 0});
  Root v = parse_root(sys, "1,1,0");
  CHECK(sys.root_index(v) >= 0);
  CHECK(root_to_string(v) == "1,1,0");
  CHECK(parse_root(sys, root_to_string(a2)) == a2);
  CHECK_THROWS(parse_root(sys, "a9"));
  CHECK(sys.root_index(Root{1, 0, 1}) == -1);  // not a root
}
