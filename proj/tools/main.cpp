#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauerlab/admissible.hpp"
#include "brauerlab/normalform.hpp"
#include "brauerlab/oracle_a.hpp"
#include "brauerlab/rewrite.hpp"
#include "brauerlab/rootsystem.hpp"

using json = nlohmann::ordered_json;
using namespace brauerlab;

namespace {

// exit codes: 0 success, 1 domain error, 2 caps exhaustion
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCaps = 2;

struct Options {
  bool json = false;
  bool no_cache = false;
  unsigned seed = 0;
  int threads = 0;
  SearchCaps caps;
};

RootSystem system_of(const std::string& type) {
  return build_root_system(CoxeterDiagram::parse(type));
}

// set argument: whitespace-separated roots, each "a<i>" or "c1,c2,...,cn"
SetIdx parse_set(const RootSystem& sys, const std::string& s) {
  SetIdx B;
  std::stringstream ss(s);
  std::string part;
  while (ss >> part) {
    int idx = sys.root_index(parse_root(sys, part));
    if (idx < 0) throw std::invalid_argument("not a root: " + part);
    B.push_back(idx);
  }
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  return B;
}

std::string set_to_string(const RootSystem& sys, const SetIdx& B) {
  std::string out;
  for (int x : B) {
    if (!out.empty()) out += " ";
    out += root_to_string(sys.positive_roots[x]);
  }
  return out.empty() ? "{}" : out;
}

json set_to_json(const RootSystem& sys, const SetIdx& B) {
  json arr = json::array();
  for (int x : B) arr.push_back(sys.positive_roots[x]);
  return arr;
}

json word_tokens_json(const Word& w) {
  json arr = json::array();
  for (Tok t : w.tokens)
    arr.push_back((tok_is_r(t) ? "r" : "e") + std::to_string(tok_node(t)));
  return arr;
}

std::vector<Coclique> cocliques_for(const RootSystem& sys) {
  if (is_e_type(sys)) return cocliques_Y(sys);
  // generic types: closures of simple-root cocliques, one per orbit
  int n = sys.rank();
  std::vector<Coclique> out;
  std::vector<SetIdx> seen;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Coclique Y;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) Y.nodes.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < Y.nodes.size() && ok; ++a)
      for (std::size_t b = a + 1; b < Y.nodes.size() && ok; ++b)
        ok = !sys.diagram.adjacent(Y.nodes[a], Y.nodes[b]);
    if (!ok) continue;
    SetIdx base = coclique_base(sys, Y);
    bool dup = false;
    for (const SetIdx& s : seen)
      if (s.size() == base.size() &&
          orbit_containing(sys, s).find(base) >= 0) {
        dup = true;
        break;
      }
    if (dup) continue;
    seen.push_back(base);
    out.push_back(Y);
  }
  return out;
}

std::string coclique_str(const Coclique& Y) {
  if (Y.nodes.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < Y.nodes.size(); ++i)
    s += (i ? "," : "") + std::to_string(Y.nodes[i]);
  return s + "}";
}

int cmd_roots(const Options& opt, const std::string& type) {
  RootSystem sys = system_of(type);
  if (opt.json) {
    json out;
    out["type"] = sys.diagram.name();
    out["count"] = sys.num_roots();
    json roots = json::array();
    for (int i = 0; i < sys.num_roots(); ++i)
      roots.push_back({{"index", i},
                       {"height", sys.height_idx(i)},
                       {"coeffs", sys.positive_roots[i]}});
    out["roots"] = roots;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << sys.diagram.name() << ": " << sys.num_roots()
              << " positive roots\n";
    for (int i = 0; i < sys.num_roots(); ++i)
      std::cout << i << "\tht " << sys.height_idx(i) << "\t"
                << root_to_string(sys.positive_roots[i]) << "\n";
  }
  return kExitOk;
}

int cmd_orbits(const Options& opt, const std::string& type) {
  RootSystem sys = system_of(type);
  json rows = json::array();
  for (const Coclique& Y : cocliques_for(sys)) {
    if (Y.nodes.empty()) continue;
    std::cerr << "orbit of Y=" << coclique_str(Y) << "...\n";
    const OrbitPoset& orb = orbit_of(sys, Y, !opt.no_cache);
    json row;
    row["Y"] = Y.nodes;
    row["base_size"] = coclique_base(sys, Y).size();
    row["orbit_size"] = orb.size();
    row["height0"] = orb.height0().size();
    row["MY"] = types_name(m_y_type(sys, orb));
    row["BYperp"] = types_name(subsystem_type(sys, coclique_base(sys, Y)));
    rows.push_back(row);
    if (!opt.json)
      std::cout << "Y=" << coclique_str(Y)
                << "  |B_Y|=" << row["base_size"].get<int>()
                << "  orbit=" << orb.size()
                << "  height0=" << row["height0"].get<int>()
                << "  M_Y=" << row["MY"].get<std::string>()
                << "  B_Y^perp=" << row["BYperp"].get<std::string>() << "\n";
  }
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()}, {"rows", rows}}.dump()
              << "\n";
  return kExitOk;
}

int cmd_closure(const Options& opt, const std::string& type,
                const std::string& set_arg) {
  RootSystem sys = system_of(type);
  SetIdx X = parse_set(sys, set_arg);
  if (!is_orthogonal(sys, X)) {
    std::cerr << "error: roots are not pairwise orthogonal\n";
    return kExitError;
  }
  SetIdx B = closure(sys, X);
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()},
                      {"input_size", X.size()},
                      {"closure_size", B.size()},
                      {"admissible", is_admissible(sys, B)},
                      {"roots", set_to_json(sys, B)}}
                     .dump()
              << "\n";
  else
    std::cout << "cl: " << set_to_string(sys, B) << "  (" << B.size()
              << " roots)\n";
  return kExitOk;
}

int cmd_action(const Options& opt, const std::string& type,
               const std::string& word_arg, const std::string& set_arg,
               const std::string& side) {
  RootSystem sys = system_of(type);
  Word w = parse_word(word_arg, sys.rank());
  SetIdx B = parse_set(sys, set_arg);
  if (!is_admissible(sys, B)) {
    std::cerr << "error: input set is not admissible\n";
    return kExitError;
  }
  SetIdx out =
      act_word(sys, w, side == "right" ? Side::Right : Side::Left, B);
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()},
                      {"side", side},
                      {"roots", set_to_json(sys, out)}}
                     .dump()
              << "\n";
  else
    std::cout << set_to_string(sys, out) << "\n";
  return kExitOk;
}

int cmd_reduce(const Options& opt, const std::string& type,
               const std::string& word_arg) {
  RootSystem sys = system_of(type);
  Word w = parse_word(word_arg, sys.rank());
  ReduceResult rr = reduce(sys, w, opt.caps);
  if (opt.json)
    std::cout << json{{"delta", rr.word.delta},
                      {"tokens", word_tokens_json(rr.word)}}
                     .dump()
              << "\n";
  else
    std::cout << word_to_string(rr.word) << "\n";
  if (rr.saturated) {
    std::cerr << "warning: search caps exhausted; result may not be minimal\n";
    return kExitCaps;
  }
  return kExitOk;
}

int cmd_equiv(const Options& opt, const std::string& type,
              const std::string& w1, const std::string& w2) {
  RootSystem sys = system_of(type);
  Equiv eq = homog_equiv(sys, parse_word(w1, sys.rank()),
                         parse_word(w2, sys.rank()), opt.caps);
  bool equivalent = eq == Equiv::Equivalent;
  if (opt.json)
    std::cout << json{{"equivalent", equivalent}}.dump() << "\n";
  else
    std::cout << (equivalent ? "equivalent" : "not-found-within-caps") << "\n";
  return equivalent ? kExitOk : kExitCaps;
}

int cmd_ab(const Options& opt, const std::string& type,
           const std::string& set_arg) {
  RootSystem sys = system_of(type);
  SetIdx B = parse_set(sys, set_arg);
  if (!is_admissible(sys, B)) {
    std::cerr << "error: input set is not admissible\n";
    return kExitError;
  }
  const OrbitPoset& orbit = orbit_containing(sys, B, !opt.no_cache);
  CanonicalWord a = build_aB(sys, orbit, B);
  CanonicalWord ab = build_aback(sys, orbit, B);
  int het = orbit.heights[orbit.find(B)];
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()},
                      {"het", het},
                      {"aB", word_to_string(a.word)},
                      {"aB_back", word_to_string(ab.word)}}
                     .dump()
              << "\n";
  else
    std::cout << "het " << het << "\naB      " << word_to_string(a.word)
              << "\naB_back " << word_to_string(ab.word) << "\n";
  return kExitOk;
}

int cmd_decompose(const Options& opt, const std::string& type,
                  const std::string& word_arg) {
  RootSystem sys = system_of(type);
  Word w = parse_word(word_arg, sys.rank());
  DecomposeResult dr;
  try {
    dr = decompose(sys, w, opt.caps);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCaps;
  }
  if (opt.json)
    std::cout << normalform_to_json(sys, dr.nf) << "\n";
  else {
    GeneratorSetSY sy = sy_generators(sys, dr.nf.Y);
    std::string hw;
    for (int i : dr.nf.h.word) hw += (hw.empty() ? "" : " ") + sy.gen_names[i];
    std::cout << "Y      " << coclique_str(dr.nf.Y) << "\nB      "
              << set_to_string(sys, dr.nf.B) << "\nB'     "
              << set_to_string(sys, dr.nf.Bp) << "\nh      "
              << (hw.empty() ? "1" : hw) << "\ndelta  " << dr.nf.delta << "\n";
  }
  if (dr.saturated)
    std::cerr << "note: default search window exhausted, escalated caps used\n";
  return kExitOk;
}

int cmd_multiply(const Options& opt, const std::string& type,
                 const std::string& nf1, const std::string& nf2) {
  RootSystem sys = system_of(type);
  NormalForm x = normalform_from_json(sys, nf1);
  NormalForm y = normalform_from_json(sys, nf2);
  DecomposeResult dr;
  try {
    dr = multiply(sys, x, y, opt.caps);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCaps;
  }
  std::cout << normalform_to_json(sys, dr.nf) << "\n";
  return kExitOk;
}

int cmd_rank(const Options& opt, const std::string& type, bool tl) {
  RootSystem sys = system_of(type);
  long long r = tl ? tl_rank(sys) : monoid_rank(sys);
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()},
                      {tl ? "tl_rank" : "rank", r}}
                     .dump()
              << "\n";
  else
    std::cout << r << "\n";
  return kExitOk;
}

struct TableRow {
  std::vector<int> Y;
  int base_size;
  const char* byperp;
  const char* my;
  int h0;
};

const std::vector<TableRow>& expected_rows(const std::string& type) {
  static const std::vector<TableRow> e6 = {
      {{6}, 1, "A5", "A5", 6},
      {{4, 6}, 2, "A3", "A2", 20},
      {{2, 3, 6}, 4, "-", "-", 15},
  };
  static const std::vector<TableRow> e7 = {
      {{7}, 1, "D6", "D6", 7},
      {{5, 7}, 2, "A1 D4", "A1 A3", 27},
      {{2, 5, 7}, 3, "D4", "A2", 21},
      {{2, 3, 7}, 4, "A1 A1 A1", "A1", 35},
      {{2, 3, 5, 7}, 7, "-", "-", 15},
  };
  static const std::vector<TableRow> e8 = {
      {{8}, 1, "E7", "E7", 8},
      {{6, 8}, 2, "D6", "A5", 35},
      {{2, 3, 8}, 4, "D4", "A2", 84},
      {{2, 3, 5, 8}, 8, "-", "-", 50},
  };
  if (type == "E6") return e6;
  if (type == "E7") return e7;
  if (type == "E8") return e8;
  throw std::invalid_argument("tables requires E6, E7, or E8");
}

int cmd_tables(const Options& opt, const std::string& type) {
  RootSystem sys = system_of(type);
  bool all_ok = true;
  auto cell = [&](const std::string& label, const std::string& got,
                  const std::string& want) {
    bool ok = got == want;
    all_ok = all_ok && ok;
    std::cout << "  " << label << ": " << got << " (expected " << want << ") "
              << (ok ? "PASS" : "FAIL") << "\n";
  };
  for (const TableRow& row : expected_rows(sys.diagram.name())) {
    Coclique Y{row.Y};
    std::cerr << "checking Y=" << coclique_str(Y) << "...\n";
    const OrbitPoset& orb = orbit_of(sys, Y, !opt.no_cache);
    SetIdx base = coclique_base(sys, Y);
    std::cout << sys.diagram.name() << " Y=" << coclique_str(Y) << "\n";
    cell("|B_Y|", std::to_string(base.size()), std::to_string(row.base_size));
    cell("B_Y^perp", types_name(subsystem_type(sys, base)), row.byperp);
    cell("M_Y", types_name(m_y_type(sys, orb)), row.my);
    cell("|(WB_Y)^0|", std::to_string(orb.height0().size()),
         std::to_string(row.h0));
  }
  std::cout << (all_ok ? "ALL PASS" : "MISMATCH") << "\n";
  return all_ok ? kExitOk : kExitError;
}

int cmd_fuzz(const Options& opt, const std::string& type, int count,
             int max_len) {
  RootSystem sys = system_of(type);
  if (sys.diagram.kind != DiagramKind::A) {
    std::cerr << "error: fuzz oracle is defined for type A only\n";
    return kExitError;
  }
  int m = sys.rank() + 1;
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> len(0, max_len), node(1, sys.rank()),
      kind(0, 1);
  int fails = 0, sat = 0;
  for (int it = 0; it < count; ++it) {
    Word w;
    int L = len(rng);
    for (int i = 0; i < L; ++i)
      w.tokens.push_back(kind(rng) ? tok_r(node(rng)) : tok_e(node(rng)));
    ReduceResult rr = reduce(sys, w, opt.caps);
    if (rr.saturated) ++sat;
    if (!(eval_word_A(m, w) == eval_word_A(m, rr.word))) {
      ++fails;
      std::cerr << "FAIL: " << word_to_string(w) << " -> "
                << word_to_string(rr.word) << "\n";
    }
    if ((it + 1) % 1000 == 0)
      std::cerr << (it + 1) << "/" << count << " words\n";
  }
  if (opt.json)
    std::cout << json{{"type", sys.diagram.name()},
                      {"count", count},
                      {"fails", fails},
                      {"saturated", sat}}
                     .dump()
              << "\n";
  else
    std::cout << count << " words, " << fails << " fails, " << sat
              << " saturated\n";
  return fails == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brauerlab: Brauer monoids of simply laced type"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("BRAUERLAB_THREADS")) opt.threads = std::atoi(env);
  app.add_flag("--json", opt.json, "machine-readable JSON on stdout");
  app.add_flag("--no-cache", opt.no_cache, "skip the on-disk orbit cache");
  app.add_option("--seed", opt.seed, "RNG seed for randomized subcommands");
  app.add_option("--caps-extra-length", opt.caps.max_extra_length,
                 "rewrite search window above input length");
  app.add_option("--caps-visited", opt.caps.max_visited,
                 "rewrite search visited-state cap");
  app.add_option("--threads", opt.threads,
                 "worker cap (current operations are single-threaded)");

  std::string type, word_arg, word2_arg, set_arg, side = "left";
  bool tl = false;
  int count = 10000, max_len = 20;

  auto add_type = [&](CLI::App* c) {
    c->add_option("type", type, "diagram: An, Dn, E6, E7, E8")->required();
  };
  add_type(app.add_subcommand("roots", "list positive roots"));
  add_type(app.add_subcommand("orbits", "admissible-set orbits per coclique"));
  auto* c_closure = app.add_subcommand("closure", "admissible closure");
  add_type(c_closure);
  c_closure->add_option("set", set_arg, "roots: \"a2 a3\" or coeff csv")->required();
  auto* c_action = app.add_subcommand("action", "monoid action on a set");
  add_type(c_action);
  c_action->add_option("word", word_arg, "word, e.g. \"r1 e2\"")->required();
  c_action->add_option("set", set_arg, "admissible set")->required();
  c_action->add_option("--side", side, "left|right")
      ->check(CLI::IsMember({"left", "right"}));
  auto* c_reduce = app.add_subcommand("reduce", "reduce a word");
  add_type(c_reduce);
  c_reduce->add_option("word", word_arg)->required();
  auto* c_equiv = app.add_subcommand("equiv", "homogeneous equivalence");
  add_type(c_equiv);
  c_equiv->add_option("word1", word_arg)->required();
  c_equiv->add_option("word2", word2_arg)->required();
  auto* c_ab = app.add_subcommand("ab", "canonical words a_B, a_B^b");
  add_type(c_ab);
  c_ab->add_option("set", set_arg)->required();
  auto* c_dec = app.add_subcommand("decompose", "normal-form decomposition");
  add_type(c_dec);
  c_dec->add_option("word", word_arg)->required();
  auto* c_mul = app.add_subcommand("multiply", "multiply two normal forms");
  add_type(c_mul);
  c_mul->add_option("nf1", word_arg, "normal form JSON")->required();
  c_mul->add_option("nf2", word2_arg, "normal form JSON")->required();
  auto* c_rank = app.add_subcommand("rank", "rank of the Brauer monoid algebra");
  add_type(c_rank);
  c_rank->add_flag("--tl", tl, "Temperley-Lieb subalgebra rank instead");
  add_type(app.add_subcommand("tables", "verify the coclique table"));
  auto* c_fuzz = app.add_subcommand("fuzz", "reduce-vs-diagram oracle fuzz (type A)");
  add_type(c_fuzz);
  c_fuzz->add_option("--count", count, "number of words");
  c_fuzz->add_option("--max-len", max_len, "maximum word length");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("roots")) return cmd_roots(opt, type);
    if (app.got_subcommand("orbits")) return cmd_orbits(opt, type);
    if (app.got_subcommand("closure")) return cmd_closure(opt, type, set_arg);
    if (app.got_subcommand("action"))
      return cmd_action(opt, type, word_arg, set_arg, side);
    if (app.got_subcommand("reduce")) return cmd_reduce(opt, type, word_arg);
    if (app.got_subcommand("equiv"))
      return cmd_equiv(opt, type, word_arg, word2_arg);
    if (app.got_subcommand("ab")) return cmd_ab(opt, type, set_arg);
    if (app.got_subcommand("decompose"))
      return cmd_decompose(opt, type, word_arg);
    if (app.got_subcommand("multiply"))
      return cmd_multiply(opt, type, word_arg, word2_arg);
    if (app.got_subcommand("rank")) return cmd_rank(opt, type, tl);
    if (app.got_subcommand("tables")) return cmd_tables(opt, type);
    if (app.got_subcommand("fuzz"))
      return cmd_fuzz(opt, type, count, max_len);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
