#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerlab/admissible.hpp"
#include "brauerlab/rootsystem.hpp"

namespace brauerlab {

// Token encoding: e_i -> i, r_i -> 64 + i. Byte-lexicographic order on encoded
// tokens is then E(1) < ... < E(n) < R(1) < ... < R(n).
using Tok = std::uint8_t;

inline Tok tok_e(int node) { return static_cast<Tok>(node); }
inline Tok tok_r(int node) { return static_cast<Tok>(64 + node); }
inline bool tok_is_r(Tok t) { return t >= 64; }
inline int tok_node(Tok t) { return t >= 64 ? t - 64 : t; }

struct Word {
  std::vector<Tok> tokens;
  int delta = 0;

  friend bool operator==(const Word& a, const Word& b) {
    return a.delta == b.delta && a.tokens == b.tokens;
  }
};

int word_height(const Word& w);
Word op_reverse(const Word& w);
Word concat(const Word& a, const Word& b);

// text: optional leading "d^<int>", then whitespace-separated "r<i>" / "e<i>"
Word parse_word(const std::string& s, int max_node);
std::string word_to_string(const Word& w);

enum class Side { Left, Right };
SetIdx act_word(const RootSystem& sys, const Word& w, Side side, const SetIdx& B);

struct SearchCaps {
  int max_extra_length = 8;
  std::size_t max_visited = 200000;
};

enum class RuleLabel {
  RSrr, RSer, RSre, HSee, HCrr, HCer, HCee, HNrrr, HNrer,
  RNrre, RNerr, HNree, RNere, HNeer, HNeee, HTeere, RTerre
};

const char* rule_name(RuleLabel label);
bool rule_reducing(RuleLabel label);

// One concrete rule instance applicable at a position.
struct RuleMatch {
  RuleLabel label;
  bool forward;  // homogeneous rules also register the reverse direction
  std::size_t pos;
  int i = 0, j = 0, k = 0;
};

// All matches at all positions, deterministic order (pos, label, direction, binding).
std::vector<RuleMatch> find_matches(const RootSystem& sys, const Word& w);
Word apply_rule_at(const RootSystem& sys, const Word& w, const RuleMatch& m);

struct ReduceResult {
  Word word;
  bool saturated = false;  // caps were exhausted before the search finished
};

ReduceResult reduce(const RootSystem& sys, const Word& w,
                    const SearchCaps& caps = {});

enum class Equiv { Equivalent, NotFoundWithinCaps };
Equiv homog_equiv(const RootSystem& sys, const Word& a, const Word& b,
                  const SearchCaps& caps = {});

}  // namespace brauerlab
