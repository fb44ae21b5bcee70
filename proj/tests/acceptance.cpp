// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brauerlab/admissible.hpp"
#include "brauerlab/normalform.hpp"
#include "brauerlab/oracle_a.hpp"
#include "brauerlab/rewrite.hpp"

using namespace brauerlab;

namespace {

int failures = 0;

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int num, const std::string& name, bool pass,
            const std::string& detail, double secs) {
  if (!pass) ++failures;
  std::printf("%s %2d %-28s %s (%.1fs)\n", pass ? "PASS" : "FAIL", num,
              name.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
}

RootSystem make(const char* t) {
  return build_root_system(CoxeterDiagram::parse(t));
}

Word w6(const std::string& s, int delta = 0) {
  Word out = parse_word(s, 6);
  out.delta += delta;
  return out;
}

// ---- criterion 1: monoid ranks ---------------------------------------------

void c1() {
  double t0 = now();
  long long r6 = monoid_rank(make("E6"));
  long long r7 = monoid_rank(make("E7"));
  long long r8 = monoid_rank(make("E8"));
  bool ok = r6 == 1440585LL && r7 == 139613625LL && r8 == 53328069225LL;
  std::ostringstream d;
  d << r6 << "/" << r7 << "/" << r8;
  report(1, "rank reproduction", ok, d.str(), now() - t0);
}

// ---- criteria 2-4: tables --------------------------------------------------

struct TableRow {
  std::vector<int> Y;
  int base_size;
  const char* byperp;
  const char* my;
  int h0;
};

const std::vector<std::pair<const char*, std::vector<TableRow>>> kTable = {
    {"E6",
     {{{6}, 1, "A5", "A5", 6},
      {{4, 6}, 2, "A3", "A2", 20},
      {{2, 3, 6}, 4, "-", "-", 15}}},
    {"E7",
     {{{7}, 1, "D6", "D6", 7},
      {{5, 7}, 2, "A1 D4", "A1 A3", 27},
      {{2, 5, 7}, 3, "D4", "A2", 21},
      {{2, 3, 7}, 4, "A1 A1 A1", "A1", 35},
      {{2, 3, 5, 7}, 7, "-", "-", 15}}},
    {"E8",
     {{{8}, 1, "E7", "E7", 8},
      {{6, 8}, 2, "D6", "A5", 35},
      {{2, 3, 8}, 4, "D4", "A2", 84},
      {{2, 3, 5, 8}, 8, "-", "-", 50}}}};

void c2() {
  double t0 = now();
  int bad = 0, cells = 0;
  for (auto& [type, rows] : kTable) {
    RootSystem sys = make(type);
    for (const TableRow& row : rows) {
      Coclique Y{row.Y};
      const OrbitPoset& orb = orbit_of(sys, Y);
      SetIdx base = coclique_base(sys, Y);
      cells += 4;
      if ((int)base.size() != row.base_size) ++bad;
      if (types_name(subsystem_type(sys, base)) != row.byperp) ++bad;
      if (types_name(m_y_type(sys, orb)) != row.my) ++bad;
      if ((int)orb.height0().size() != row.h0) ++bad;
    }
  }
  std::ostringstream d;
  d << cells << " cells, " << bad << " mismatches";
  report(2, "coclique table", bad == 0, d.str(), now() - t0);
}

void c3() {
  double t0 = now();
  long long a = tl_rank(make("E6")), b = tl_rank(make("E7")),
            c = tl_rank(make("E8"));
  std::ostringstream d;
  d << a << "/" << b << "/" << c;
  report(3, "Temperley-Lieb ranks", a == 662 && b == 2670 && c == 10846,
         d.str(), now() - t0);
}

void c4() {
  double t0 = now();
  const std::vector<std::pair<const char*, std::vector<long long>>> want = {
      {"E6", {15, 15}}, {"E7", {30, 15, 60, 15}}, {"E8", {63, 315, 135}}};
  bool ok = true;
  for (auto& [type, counts] : want) {
    RootSystem sys = make(type);
    std::vector<long long> got;
    for (const Coclique& Y : cocliques_Y(sys)) {
      if (Y.nodes.empty() || coclique_base(sys, Y).size() < 2) continue;
      got.push_back(count_containing(sys, orbit_of(sys, Y), sys.rank()));
    }
    ok = ok && got == counts;
  }
  report(4, "|B^n| counts", ok, "3 tables", now() - t0);
}

// ---- criterion 5: rewrite vector suite -------------------------------------

void c5() {
  double t0 = now();
  RootSystem sys = make("E6");
  Word s0 = w6("e6 e5 e4 r2 e3 e4 e5 e6", -1);
  Word s1 = w6("r1 e6", -1);
  Word s2 = w6("r2 e6", -1);
  Word t1 = w6("r1 e4 e6", -2);
  Word t2 = w6("e4 r2 e3 e4 e6", -2);
  Word f0 = w6("e6 e5 e4 e2 e3 e4 e5 e6", -1);
  Word f1 = w6("e1 e6", -1);

  struct Vec {
    const char* name;
    Word lhs;
    Word rhs;
  };
  std::vector<Vec> vecs = {
      {"s0^2 = ehat6", concat(s0, s0), w6("e6", -1)},
      {"s1s0s1 = s0s1s0", concat(concat(s1, s0), s1),
       concat(concat(s0, s1), s0)},
      {"s2s0 = s0s2", concat(s2, s0), concat(s0, s2)},
      {"t2^2 = ehat46", concat(t2, t2), w6("e4 e6", -2)},
      {"t1t2t1 = t2t1t2", concat(concat(t1, t2), t1),
       concat(concat(t2, t1), t2)},
      {"f0^2 = delta f0", concat(f0, f0), Word{f0.tokens, f0.delta + 1}},
      {"s1s0f1 = f0f1", concat(concat(s1, s0), f1), concat(f0, f1)},
      {"remark identity", w6("e2 e3 e6 e5 e4 e3 e2 e4 e5 e6"),
       w6("e2 e3 e6", 1)},
  };
  int bad = 0, sat = 0;
  double worst = 0;
  for (const Vec& v : vecs) {
    double tc = now();
    ReduceResult la = reduce(sys, v.lhs), ra = reduce(sys, v.rhs);
    bool ok = homog_equiv(sys, la.word, ra.word) == Equiv::Equivalent;
    sat += la.saturated || ra.saturated;
    double dt = now() - tc;
    worst = std::max(worst, dt);
    if (!ok || dt >= 1.0) {
      ++bad;
      std::fprintf(stderr, "  vector %s: %s in %.2fs\n", v.name,
                   ok ? "ok but slow" : "FAILED", dt);
    }
  }
  std::ostringstream d;
  d << vecs.size() << " vectors, worst " << worst << "s, " << sat
    << " capped sweeps";
  report(5, "rewrite vector suite", bad == 0, d.str(), now() - t0);
}

// ---- criterion 6: Matsumoto-Tits -------------------------------------------

void c6() {
  double t0 = now();
  bool ok = true;
  int rows = 0;
  for (const char* type : {"E6", "E7", "E8"}) {
    RootSystem sys = make(type);
    bool is_e8 = std::string(type) == "E8";
    int row = 0;
    for (const Coclique& Y : cocliques_Y(sys)) {
      if (Y.nodes.empty()) continue;
      ++row;
      if (is_e8 && row == 1) continue;  // reported separately below
      MTReport rep = verify_matsumoto_tits(sys, Y);
      ok = ok && rep.all_pass();
      ++rows;
    }
  }
  std::ostringstream d;
  d << rows << " rows at default caps";
  report(6, "Matsumoto-Tits", ok, d.str(), now() - t0);

  // E8 row 1 separately (spec allows escalated caps; default caps suffice)
  t0 = now();
  RootSystem e8 = make("E8");
  MTReport rep = verify_matsumoto_tits(e8, Coclique{{8}});
  std::ostringstream d2;
  d2 << rep.relations.size() << " relations at default caps";
  report(6, "Matsumoto-Tits E8 row 1", rep.all_pass(), d2.str(), now() - t0);
}

// ---- criterion 7: a_B sweep ------------------------------------------------

bool check_aB(const RootSystem& sys, const OrbitPoset& orb, const SetIdx& B) {
  const SetIdx& base = orb.members[orb.base];
  CanonicalWord a = build_aB(sys, orb, B);
  CanonicalWord ab = build_aback(sys, orb, B);
  int het = orb.heights[orb.find(B)];
  return word_height(a.word) == het && word_height(ab.word) == het &&
         act_word(sys, a.word, Side::Left, {}) == B &&
         act_word(sys, a.word, Side::Right, {}) == base &&
         act_word(sys, ab.word, Side::Right, B) == base;
}

void c7() {
  double t0 = now();
  int bad = 0, checked = 0;
  RootSystem e6 = make("E6");
  for (const Coclique& Y : cocliques_Y(e6)) {
    if (Y.nodes.empty()) continue;
    const OrbitPoset& orb = orbit_of(e6, Y);
    for (const SetIdx& B : orb.members) {
      ++checked;
      if (!check_aB(e6, orb, B)) ++bad;
    }
  }
  double e6_time = now() - t0;
  int e6_checked = checked;

  std::mt19937 rng(2024);
  for (const char* type : {"E7", "E8"}) {
    RootSystem sys = make(type);
    std::vector<std::pair<const OrbitPoset*, int>> pool;
    for (const Coclique& Y : cocliques_Y(sys)) {
      if (Y.nodes.empty()) continue;
      const OrbitPoset& orb = orbit_of(sys, Y);
      for (int i = 0; i < orb.size(); ++i) pool.push_back({&orb, i});
    }
    for (int it = 0; it < 1000; ++it) {
      auto [orb, i] = pool[rng() % pool.size()];
      ++checked;
      if (!check_aB(sys, *orb, orb->members[i])) ++bad;
    }
  }
  std::ostringstream d;
  d << e6_checked << " E6 sets in " << e6_time << "s + 2000 sampled, " << bad
    << " bad";
  report(7, "a_B sweep", bad == 0 && e6_checked == 441 && e6_time < 30,
         d.str(), now() - t0);
}

// ---- criterion 8: action soundness -----------------------------------------

void c8() {
  double t0 = now();
  RootSystem sys = make("E6");
  int n = sys.rank();

  // all rule instances as (lhs, rhs) word pairs, via the matcher itself
  std::vector<std::pair<Word, Word>> instances;
  auto add = [&](const std::string& lhs_str) {
    Word lhs = parse_word(lhs_str, n);
    for (const RuleMatch& m : find_matches(sys, lhs))
      instances.push_back({lhs, apply_rule_at(sys, lhs, m)});
  };
  auto tok = [](char kind, int i) {
    return std::string(1, kind) + std::to_string(i);
  };
  for (int i = 1; i <= n; ++i) {
    add(tok('r', i) + " " + tok('r', i));
    add(tok('e', i) + " " + tok('r', i));
    add(tok('r', i) + " " + tok('e', i));
    add(tok('e', i) + " " + tok('e', i));
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (char a : {'r', 'e'})
        for (char b : {'r', 'e'}) {
          add(tok(a, i) + " " + tok(b, j));                       // commutes?
          add(tok(a, i) + " " + tok(b, j) + " " + tok(a, i));     // triples
        }
      add(tok('r', j) + " " + tok('r', i) + " " + tok('e', j));
      add(tok('e', i) + " " + tok('r', j) + " " + tok('r', i));
      add(tok('r', i) + " " + tok('e', j) + " " + tok('e', i));
      add(tok('e', i) + " " + tok('e', j) + " " + tok('r', i));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        add(tok('e', j) + " " + tok('e', i) + " " + tok('r', k) + " " +
            tok('e', j));
        add(tok('e', j) + " " + tok('r', i) + " " + tok('r', k) + " " +
            tok('e', j));
      }
    }
  }

  // all members of every E6 orbit, including the empty set
  std::vector<SetIdx> members;
  members.push_back({});
  for (const Coclique& Y : cocliques_Y(sys)) {
    if (Y.nodes.empty()) continue;
    const OrbitPoset& orb = orbit_of(sys, Y);
    members.insert(members.end(), orb.members.begin(), orb.members.end());
  }

  long long checks = 0;
  int bad = 0;
  for (auto& [lhs, rhs] : instances)
    for (const SetIdx& B : members) {
      ++checks;
      if (act_word(sys, lhs, Side::Left, B) !=
              act_word(sys, rhs, Side::Left, B) ||
          act_word(sys, lhs, Side::Right, B) !=
              act_word(sys, rhs, Side::Right, B))
        ++bad;
    }
  std::ostringstream d;
  d << instances.size() << " rule instances x " << members.size()
    << " sets, " << bad << " violations";
  report(8, "action soundness", bad == 0 && !instances.empty(), d.str(),
         now() - t0);
}

// ---- criterion 9: oracle fuzz ----------------------------------------------

void c9() {
  double t0 = now();
  SearchCaps caps;
  caps.max_extra_length = 4;  // verified byte-identical to the default window
  int fails = 0;
  for (int m : {5, 6}) {
    RootSystem sys = build_root_system(CoxeterDiagram::make(DiagramKind::A, m - 1));
    std::mt19937 rng(999 + m);
    for (int it = 0; it < 5000; ++it) {
      Word v;
      int L = (int)(rng() % 21);
      for (int i = 0; i < L; ++i) {
        int node = 1 + (int)(rng() % (m - 1));
        v.tokens.push_back(rng() % 2 ? tok_r(node) : tok_e(node));
      }
      ReduceResult rr = reduce(sys, v, caps);
      if (!(eval_word_A(m, rr.word) == eval_word_A(m, v))) ++fails;
    }
  }
  double dt = now() - t0;
  std::ostringstream d;
  d << "10000 words, " << fails << " fails";
  report(9, "oracle fuzz", fails == 0 && dt < 60, d.str(), dt);
}

// ---- criterion 10: type A pipeline -----------------------------------------

void c10() {
  double t0 = now();
  long long a = monoid_rank(make("A2")), b = monoid_rank(make("A3")),
            c = monoid_rank(make("A4"));
  std::ostringstream d;
  d << a << "/" << b << "/" << c;
  report(10, "type A rank pipeline", a == 15 && b == 105 && c == 945, d.str(),
         now() - t0);
}

// ---- criterion 11: decompose round trip ------------------------------------

void c11() {
  double t0 = now();
  RootSystem sys = make("E6");
  std::mt19937 rng(424242);
  auto ys = cocliques_Y(sys);
  std::vector<Coclique> nonempty(ys.begin() + 1, ys.end());

  int ok = 0, bad = 0;
  int sat_low = 0, low_total = 0, sat_h3 = 0, h3_total = 0;
  std::vector<Word> words;
  for (int it = 0; it < 500; ++it) {
    const Coclique& Y = nonempty[rng() % nonempty.size()];
    const OrbitPoset& orb = orbit_of(sys, Y);
    GeneratorSetSY sy = sy_generators(sys, Y);
    std::vector<int> lows;
    for (int i = 0; i < orb.size(); ++i)
      if (orb.heights[i] <= 3) lows.push_back(i);
    int bi = lows[rng() % lows.size()], bj = lows[rng() % lows.size()];
    std::vector<int> hw;
    if (!sy.gens.empty())
      for (int i = 0; i < (int)(rng() % 5); ++i)
        hw.push_back((int)(rng() % sy.gens.size()));
    NormalForm nf{Y, orb.members[bi], orb.members[bj],
                  coxeter_from_word(sy.cartan, hw), (int)(rng() % 7) - 3};
    Word w = synthesize(sys, nf);
    int height_class = std::max(orb.heights[bi], orb.heights[bj]);
    try {
      DecomposeResult dr = decompose(sys, w);
      if (dr.nf == nf) ++ok; else ++bad;
      if (height_class <= 2) {
        ++low_total;
        sat_low += dr.saturated;
      } else {
        ++h3_total;
        sat_h3 += dr.saturated;
      }
    } catch (const std::exception&) {
      ++bad;
    }
    if (words.size() < 50) words.push_back(w);
  }

  // constancy under homogeneous perturbation: 2 variants of each of 50 words
  int const_bad = 0, variants = 0;
  for (const Word& w : words) {
    NormalForm base = decompose(sys, w).nf;
    for (int v = 0; v < 2; ++v) {
      Word cur = w;
      for (int step = 0; step < 3; ++step) {
        std::vector<RuleMatch> homog;
        for (const RuleMatch& m : find_matches(sys, cur))
          if (!rule_reducing(m.label)) homog.push_back(m);
        if (homog.empty()) break;
        cur = apply_rule_at(sys, cur, homog[rng() % homog.size()]);
      }
      ++variants;
      if (!(decompose(sys, cur).nf == base)) ++const_bad;
    }
  }

  double dt = now() - t0;
  bool pass = bad == 0 && const_bad == 0 && dt < 300 && sat_low == 0 &&
              (h3_total == 0 || sat_h3 * 20 <= h3_total);
  std::ostringstream d;
  d << ok << "/500 round trips, " << variants << " perturbed variants ("
    << const_bad << " drift), escalation " << sat_low << "/" << low_total
    << " at het<=2, " << sat_h3 << "/" << h3_total << " at het 3";
  report(11, "decompose round trip", pass, d.str(), dt);
}

}  // namespace

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  c10();
  c11();
  std::printf("%s: %d criteria failed\n", failures ? "RESULT FAIL" : "RESULT PASS",
              failures);
  return failures ? 1 : 0;
}
