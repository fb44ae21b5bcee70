#pragma once

#include <string>
#include <vector>

#include "brauerlab/admissible.hpp"
#include "brauerlab/rewrite.hpp"

namespace brauerlab {

// raw e_Y tokens (ascending) with delta -|Y|
Word e_hat_word(const Coclique& Y);

// pure-e word with act_word(word, Left, from) = to; from, to height-0 members
// of the same orbit
Word brink_howlett(const RootSystem& sys, const OrbitPoset& orbit,
                   const SetIdx& from, const SetIdx& to);

enum class Direction { Forward, Backward };

struct CanonicalWord {
  Word word;
  SetIdx target;
  Direction direction;
};

CanonicalWord build_aB(const RootSystem& sys, const OrbitPoset& orbit,
                       const SetIdx& B);
CanonicalWord build_aback(const RootSystem& sys, const OrbitPoset& orbit,
                          const SetIdx& B);
// convenience overloads resolving the orbit through the cache
CanonicalWord build_aB(const RootSystem& sys, const SetIdx& B);
CanonicalWord build_aback(const RootSystem& sys, const SetIdx& B);

// Distinguished generators of H_Y over e-hat_Y, with the Coxeter graph they
// realize. For Y = {} the generators are r_1..r_n over the full diagram.
struct GeneratorSetSY {
  Coclique coclique;
  std::vector<Word> gens;
  std::vector<std::string> gen_names;          // "s0", "r1", ...
  std::vector<std::vector<int>> cartan;        // of the generator graph
  std::vector<CoxeterDiagram> my_types;        // type decomposition of M_Y
};

GeneratorSetSY sy_generators(const RootSystem& sys, const Coclique& Y);

// Element of W(M_Y) in the integer reflection representation, with a reduced
// word (generator indices) maintained by the descent algorithm.
struct CoxeterElement {
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> matrix;
  std::vector<int> word;

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.matrix == b.matrix;
  }
};

CoxeterElement coxeter_identity(const std::vector<std::vector<int>>& cartan);
CoxeterElement coxeter_gen(const std::vector<std::vector<int>>& cartan, int i);
CoxeterElement coxeter_from_word(const std::vector<std::vector<int>>& cartan,
                                 const std::vector<int>& word);
CoxeterElement coxeter_mul(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement coxeter_inverse(const CoxeterElement& a);

struct MTRelation {
  std::string desc;
  bool pass = false;
  bool saturated = false;
};

struct MTReport {
  std::vector<MTRelation> relations;
  bool all_pass() const;
  bool any_saturated() const;
};

MTReport verify_matsumoto_tits(const RootSystem& sys, const Coclique& Y,
                               const SearchCaps& caps = {});

struct PeelResult {
  CoxeterElement h;
  int delta_exp = 0;
  bool saturated = false;
};

// w must represent an element of delta^Z pi(H_Y)
PeelResult peel(const RootSystem& sys, const GeneratorSetSY& sy, const Word& w,
                const SearchCaps& caps = {});

struct NormalForm {
  Coclique Y;
  SetIdx B;
  SetIdx Bp;
  CoxeterElement h;
  int delta = 0;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.Y == b.Y && a.B == b.B && a.Bp == b.Bp && a.h == b.h &&
           a.delta == b.delta;
  }
};

struct DecomposeResult {
  NormalForm nf;
  bool saturated = false;
};

DecomposeResult decompose(const RootSystem& sys, const Word& w,
                          const SearchCaps& caps = {});
Word synthesize(const RootSystem& sys, const NormalForm& nf);
DecomposeResult multiply(const RootSystem& sys, const NormalForm& x,
                         const NormalForm& y, const SearchCaps& caps = {});

// |T| = sum over orbit-representative cocliques of |W(M_Y)| * |W B_Y|^2
long long monoid_rank(const RootSystem& sys);
// 1 + sum over nonempty Y of |(W B_Y)^0|^2
long long tl_rank(const RootSystem& sys);

// |W| of a (possibly reducible) diagram by orbit enumeration of a regular
// weight in the reflection representation
long long weyl_order_enumerated(const std::vector<CoxeterDiagram>& ds);

std::string normalform_to_json(const RootSystem& sys, const NormalForm& nf);
NormalForm normalform_from_json(const RootSystem& sys, const std::string& s);

}  // namespace brauerlab
