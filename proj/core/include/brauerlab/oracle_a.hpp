#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brauerlab/rewrite.hpp"

namespace brauerlab {

// Perfect matching on 2m points: top_1..top_m are 0..m-1, bot_1..bot_m are
// m..2m-1. Pairs are normalized (each sorted, list sorted).
struct BrauerDiagram {
  int m = 0;
  std::vector<std::pair<int, int>> pairs;
  int loops = 0;

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.m == b.m && a.pairs == b.pairs && a.loops == b.loops;
  }
};

BrauerDiagram identity_diagram(int m);
BrauerDiagram r_diagram(int m, int node);  // node in 1..m-1
BrauerDiagram e_diagram(int m, int node);

// stack d1 over d2; closed cycles feed the loop ledger
BrauerDiagram compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

// left-to-right composition; w over type A_{m-1}; w.delta added to loops
BrauerDiagram eval_word_A(int m, const Word& w);

// (2m-1)!!
long long diagram_count(int m);

// {"m":int,"pairs":[["t1","b3"],...],"loops":int}
std::string diagram_to_json(const BrauerDiagram& d);
BrauerDiagram diagram_from_json(const std::string& s);

}  // namespace brauerlab
