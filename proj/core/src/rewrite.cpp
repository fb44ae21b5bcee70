#include "brauerlab/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace brauerlab {

int word_height(const Word& w) {
  int h = 0;
  for (Tok t : w.tokens)
    if (tok_is_r(t)) ++h;
  return h;
}

Word op_reverse(const Word& w) {
  Word out(w);
  std::reverse(out.tokens.begin(), out.tokens.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
  out.delta += b.delta;
  return out;
}

Word parse_word(const std::string& s, int max_node) {
  Word w;
  std::stringstream ss(s);
  std::string part;
  bool first = true;
  while (ss >> part) {
    if (first && part.rfind("d^", 0) == 0) {
      w.delta = std::atoi(part.c_str() + 2);
      first = false;
      continue;
    }
    first = false;
    if (part.size() < 2 || (part[0] != 'r' && part[0] != 'e'))
      throw std::invalid_argument("bad token: " + part);
    int node = std::atoi(part.c_str() + 1);
    if (node < 1 || node > max_node)
      throw std::invalid_argument("token index out of range: " + part);
    w.tokens.push_back(part[0] == 'r' ? tok_r(node) : tok_e(node));
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string out;
  if (w.delta != 0) out = "d^" + std::to_string(w.delta);
  for (Tok t : w.tokens) {
    if (!out.empty()) out += " ";
    out += (tok_is_r(t) ? "r" : "e") + std::to_string(tok_node(t));
  }
  return out;
}

SetIdx act_word(const RootSystem& sys, const Word& w, Side side, const SetIdx& B) {
  if (side == Side::Right) return act_word(sys, op_reverse(w), Side::Left, B);
  SetIdx cur(B);
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    int node = tok_node(*it);
    cur = tok_is_r(*it) ? act_r(sys, node, cur) : act_e(sys, node, cur);
  }
  return cur;
}

const char* rule_name(RuleLabel label) {
  switch (label) {
    case RuleLabel::RSrr: return "RSrr";
    case RuleLabel::RSer: return "RSer";
    case RuleLabel::RSre: return "RSre";
    case RuleLabel::HSee: return "HSee";
    case RuleLabel::HCrr: return "HCrr";
    case RuleLabel::HCer: return "HCer";
    case RuleLabel::HCee: return "HCee";
    case RuleLabel::HNrrr: return "HNrrr";
    case RuleLabel::HNrer: return "HNrer";
    case RuleLabel::RNrre: return "RNrre";
    case RuleLabel::RNerr: return "RNerr";
    case RuleLabel::HNree: return "HNree";
    case RuleLabel::RNere: return "RNere";
    case RuleLabel::HNeer: return "HNeer";
    case RuleLabel::HNeee: return "HNeee";
    case RuleLabel::HTeere: return "HTeere";
    case RuleLabel::RTerre: return "RTerre";
  }
  return "?";
}

bool rule_reducing(RuleLabel label) {
  switch (label) {
    case RuleLabel::RSrr:
    case RuleLabel::RSer:
    case RuleLabel::RSre:
    case RuleLabel::RNrre:
    case RuleLabel::RNerr:
    case RuleLabel::RNere:
    case RuleLabel::RTerre:
      return true;
    default:
      return false;
  }
}

namespace {

struct Ctx {
  const CoxeterDiagram* d;
  bool adj(Tok a, Tok b) const { return d->adjacent(tok_node(a), tok_node(b)); }
};

// Tries the height-reducing rules at position p; returns matched label or -1.
int match_reducer_at(const Ctx& c, const std::vector<Tok>& t, std::size_t p,
                     RuleMatch* m) {
  std::size_t n = t.size();
  if (p + 1 < n) {
    Tok a = t[p], b = t[p + 1];
    if (tok_node(a) == tok_node(b)) {
      if (tok_is_r(a) && tok_is_r(b)) {
        *m = {RuleLabel::RSrr, true, p, tok_node(a)};
        return 1;
      }
      if (!tok_is_r(a) && tok_is_r(b)) {
        *m = {RuleLabel::RSer, true, p, tok_node(a)};
        return 1;
      }
      if (tok_is_r(a) && !tok_is_r(b)) {
        *m = {RuleLabel::RSre, true, p, tok_node(a)};
        return 1;
      }
    }
  }
  if (p + 2 < n) {
    Tok a = t[p], b = t[p + 1], cc = t[p + 2];
    // RNrre: r_y r_x e_y -> e_x e_y
    if (tok_is_r(a) && tok_is_r(b) && !tok_is_r(cc) &&
        tok_node(a) == tok_node(cc) && c.adj(a, b)) {
      *m = {RuleLabel::RNrre, true, p, tok_node(b), tok_node(a)};
      return 1;
    }
    // RNerr: e_x r_y r_x -> e_x e_y
    if (!tok_is_r(a) && tok_is_r(b) && tok_is_r(cc) &&
        tok_node(a) == tok_node(cc) && c.adj(a, b)) {
      *m = {RuleLabel::RNerr, true, p, tok_node(a), tok_node(b)};
      return 1;
    }
    // RNere: e_x r_y e_x -> e_x
    if (!tok_is_r(a) && tok_is_r(b) && !tok_is_r(cc) &&
        tok_node(a) == tok_node(cc) && c.adj(a, b)) {
      *m = {RuleLabel::RNere, true, p, tok_node(a), tok_node(b)};
      return 1;
    }
  }
  if (p + 3 < n) {
    Tok b0 = t[p], a = t[p + 1], cc = t[p + 2], b1 = t[p + 3];
    // RTerre: e_b r_a r_c e_b -> e_b e_a e_c e_b   (a~b~c, a != c)
    if (!tok_is_r(b0) && tok_is_r(a) && tok_is_r(cc) && !tok_is_r(b1) &&
        tok_node(b0) == tok_node(b1) && tok_node(a) != tok_node(cc) &&
        c.adj(b0, a) && c.adj(b0, cc)) {
      *m = {RuleLabel::RTerre, true, p, tok_node(a), tok_node(b0), tok_node(cc)};
      return 1;
    }
  }
  return -1;
}

// Homogeneous shrinkers: HSee fwd, HNeee fwd, HNree fwd, HNeer fwd.
int match_shrinker_at(const Ctx& c, const std::vector<Tok>& t, std::size_t p,
                      RuleMatch* m) {
  std::size_t n = t.size();
  if (p + 1 < n && !tok_is_r(t[p]) && t[p] == t[p + 1]) {
    *m = {RuleLabel::HSee, true, p, tok_node(t[p])};
    return 1;
  }
  if (p + 2 < n) {
    Tok a = t[p], b = t[p + 1], cc = t[p + 2];
    // HNeee: e_x e_y e_x -> e_x
    if (!tok_is_r(a) && !tok_is_r(b) && a == cc && c.adj(a, b)) {
      *m = {RuleLabel::HNeee, true, p, tok_node(a), tok_node(b)};
      return 1;
    }
    // HNree: r_y e_x e_y -> r_x e_y
    if (tok_is_r(a) && !tok_is_r(b) && !tok_is_r(cc) &&
        tok_node(a) == tok_node(cc) && c.adj(b, cc)) {
      *m = {RuleLabel::HNree, true, p, tok_node(b), tok_node(a)};
      return 1;
    }
    // HNeer: e_y e_x r_y -> e_y r_x
    if (!tok_is_r(a) && !tok_is_r(b) && tok_is_r(cc) &&
        tok_node(a) == tok_node(cc) && c.adj(a, b)) {
      *m = {RuleLabel::HNeer, true, p, tok_node(b), tok_node(a)};
      return 1;
    }
  }
  return -1;
}

}  // namespace

Word apply_rule_at(const RootSystem& sys, const Word& w, const RuleMatch& m) {
  Word out;
  out.delta = w.delta;
  const auto& t = w.tokens;
  std::size_t p = m.pos;
  auto keep = [&](std::size_t from, std::size_t to) {
    for (std::size_t q = from; q < to; ++q) out.tokens.push_back(t[q]);
  };
  keep(0, p);
  switch (m.label) {
    case RuleLabel::RSrr:
      keep(p + 2, t.size());
      break;
    case RuleLabel::RSer:
    case RuleLabel::RSre:
      out.tokens.push_back(tok_e(m.i));
      keep(p + 2, t.size());
      break;
    case RuleLabel::HSee:
      if (m.forward) {
        out.tokens.push_back(tok_e(m.i));
        out.delta += 1;
        keep(p + 2, t.size());
      } else {
        out.tokens.push_back(tok_e(m.i));
        out.tokens.push_back(tok_e(m.i));
        out.delta -= 1;
        keep(p + 1, t.size());
      }
      break;
    case RuleLabel::HCrr:
    case RuleLabel::HCer:
    case RuleLabel::HCee:
      out.tokens.push_back(t[p + 1]);
      out.tokens.push_back(t[p]);
      keep(p + 2, t.size());
      break;
    case RuleLabel::HNrrr:
      out.tokens.push_back(tok_r(m.j));
      out.tokens.push_back(tok_r(m.i));
      out.tokens.push_back(tok_r(m.j));
      keep(p + 3, t.size());
      break;
    case RuleLabel::HNrer:
      out.tokens.push_back(tok_r(m.i));
      out.tokens.push_back(tok_e(m.j));
      out.tokens.push_back(tok_r(m.i));
      keep(p + 3, t.size());
      break;
    case RuleLabel::RNrre:
    case RuleLabel::RNerr:
      out.tokens.push_back(tok_e(m.i));
      out.tokens.push_back(tok_e(m.j));
      keep(p + 3, t.size());
      break;
    case RuleLabel::RNere:
      out.tokens.push_back(tok_e(m.i));
      keep(p + 3, t.size());
      break;
    case RuleLabel::HNree:
      if (m.forward) {
        out.tokens.push_back(tok_r(m.i));
        out.tokens.push_back(tok_e(m.j));
        keep(p + 3, t.size());
      } else {
        out.tokens.push_back(tok_r(m.j));
        out.tokens.push_back(tok_e(m.i));
        out.tokens.push_back(tok_e(m.j));
        keep(p + 2, t.size());
      }
      break;
    case RuleLabel::HNeer:
      if (m.forward) {
        out.tokens.push_back(tok_e(m.j));
        out.tokens.push_back(tok_r(m.i));
        keep(p + 3, t.size());
      } else {
        out.tokens.push_back(tok_e(m.j));
        out.tokens.push_back(tok_e(m.i));
        out.tokens.push_back(tok_r(m.j));
        keep(p + 2, t.size());
      }
      break;
    case RuleLabel::HNeee:
      if (m.forward) {
        out.tokens.push_back(tok_e(m.i));
        keep(p + 3, t.size());
      } else {
        out.tokens.push_back(tok_e(m.i));
        out.tokens.push_back(tok_e(m.j));
        out.tokens.push_back(tok_e(m.i));
        keep(p + 1, t.size());
      }
      break;
    case RuleLabel::HTeere:
      out.tokens.push_back(tok_e(m.j));
      if (m.forward) {
        out.tokens.push_back(tok_r(m.i));
        out.tokens.push_back(tok_e(m.k));
      } else {
        out.tokens.push_back(tok_e(m.i));
        out.tokens.push_back(tok_r(m.k));
      }
      out.tokens.push_back(tok_e(m.j));
      keep(p + 4, t.size());
      break;
    case RuleLabel::RTerre:
      out.tokens.push_back(tok_e(m.j));
      out.tokens.push_back(tok_e(m.i));
      out.tokens.push_back(tok_e(m.k));
      out.tokens.push_back(tok_e(m.j));
      keep(p + 4, t.size());
      break;
  }
  return out;
}

namespace {

// Enumerates homogeneous rule matches on w in a deterministic order.
template <typename F>
void for_each_homog_match(const RootSystem& sys, const Ctx& c, const Word& w,
                          std::size_t len_cap, F&& emit) {
  (void)sys;
  const auto& t = w.tokens;
  std::size_t n = t.size();
  for (std::size_t p = 0; p < n; ++p) {
    RuleMatch m;
    // HSee fwd
    if (p + 1 < n && !tok_is_r(t[p]) && t[p] == t[p + 1]) {
      m = {RuleLabel::HSee, true, p, tok_node(t[p])};
      emit(m);
    }
    // commutation
    if (p + 1 < n && tok_node(t[p]) != tok_node(t[p + 1]) && !c.adj(t[p], t[p + 1])) {
      RuleLabel lab = tok_is_r(t[p])
                          ? (tok_is_r(t[p + 1]) ? RuleLabel::HCrr : RuleLabel::HCer)
                          : (tok_is_r(t[p + 1]) ? RuleLabel::HCer : RuleLabel::HCee);
      m = {lab, true, p, tok_node(t[p]), tok_node(t[p + 1])};
      emit(m);
    }
    if (p + 2 < n) {
      Tok a = t[p], b = t[p + 1], cc = t[p + 2];
      bool ra = tok_is_r(a), rb = tok_is_r(b), rc = tok_is_r(cc);
      if (tok_node(a) == tok_node(cc) && c.adj(a, b)) {
        if (ra && rb && rc) {
          m = {RuleLabel::HNrrr, true, p, tok_node(a), tok_node(b)};
          emit(m);
        }
        if (ra && !rb && rc) {
          // r_j e_i r_j -> r_i e_j r_i with j = node(a), i = node(b)
          m = {RuleLabel::HNrer, true, p, tok_node(b), tok_node(a)};
          emit(m);
        }
        if (!ra && !rb && !rc) {
          m = {RuleLabel::HNeee, true, p, tok_node(a), tok_node(b)};
          emit(m);
        }
        if (!ra && !rb && rc) {
          m = {RuleLabel::HNeer, true, p, tok_node(b), tok_node(a)};
          emit(m);
        }
      }
      if (ra && !rb && !rc && tok_node(a) == tok_node(cc) && c.adj(b, cc)) {
        m = {RuleLabel::HNree, true, p, tok_node(b), tok_node(a)};
        emit(m);
      }
    }
    // HNree bwd: r_x e_y -> r_y e_x e_y
    if (p + 1 < n && tok_is_r(t[p]) && !tok_is_r(t[p + 1]) &&
        c.adj(t[p], t[p + 1]) && n + 1 <= len_cap) {
      m = {RuleLabel::HNree, false, p, tok_node(t[p]), tok_node(t[p + 1])};
      emit(m);
    }
    // HNeer bwd: e_y r_x -> e_y e_x r_y
    if (p + 1 < n && !tok_is_r(t[p]) && tok_is_r(t[p + 1]) &&
        c.adj(t[p], t[p + 1]) && n + 1 <= len_cap) {
      m = {RuleLabel::HNeer, false, p, tok_node(t[p + 1]), tok_node(t[p])};
      emit(m);
    }
    // HNeee bwd: e_x -> e_x e_y e_x for each neighbor y
    if (!tok_is_r(t[p]) && n + 2 <= len_cap) {
      for (int y : sys.diagram.neighbors(tok_node(t[p]))) {
        m = {RuleLabel::HNeee, false, p, tok_node(t[p]), y};
        emit(m);
      }
    }
    // HTeere, both directions
    if (p + 3 < n) {
      Tok b0 = t[p], x = t[p + 1], y = t[p + 2], b1 = t[p + 3];
      if (!tok_is_r(b0) && !tok_is_r(b1) && tok_node(b0) == tok_node(b1) &&
          tok_node(x) != tok_node(y) && c.adj(b0, x) && c.adj(b0, y)) {
        if (!tok_is_r(x) && tok_is_r(y)) {
          m = {RuleLabel::HTeere, true, p, tok_node(x), tok_node(b0), tok_node(y)};
          emit(m);
        }
        if (tok_is_r(x) && !tok_is_r(y)) {
          m = {RuleLabel::HTeere, false, p, tok_node(x), tok_node(b0), tok_node(y)};
          emit(m);
        }
      }
    }
  }
}

template <typename F>
void for_each_homog_neighbor(const RootSystem& sys, const Ctx& c, const Word& w,
                             std::size_t len_cap, F&& emit) {
  for_each_homog_match(sys, c, w, len_cap, [&](const RuleMatch& m) {
    emit(apply_rule_at(sys, w, m));
  });
}

std::string word_key(const Word& w) {
  std::string k(w.tokens.begin(), w.tokens.end());
  int d = w.delta;
  for (int i = 0; i < 4; ++i) {
    k.push_back(static_cast<char>(d & 0xff));
    d >>= 8;
  }
  return k;
}

bool word_less(const Word& a, const Word& b) {
  if (a.tokens.size() != b.tokens.size())
    return a.tokens.size() < b.tokens.size();
  return a.tokens < b.tokens;
}

// Applies every length- or height-decreasing rule instance, leftmost first.
Word greedy_shrink(const RootSystem& sys, const Ctx& c, Word w) {
  for (;;) {
    bool fired = false;
    for (std::size_t p = 0; p < w.tokens.size() && !fired; ++p) {
      RuleMatch m;
      if (match_reducer_at(c, w.tokens, p, &m) > 0 ||
          match_shrinker_at(c, w.tokens, p, &m) > 0) {
        w = apply_rule_at(sys, w, m);
        fired = true;
      }
    }
    if (!fired) return w;
  }
}

}  // namespace

std::vector<RuleMatch> find_matches(const RootSystem& sys, const Word& w) {
  Ctx c{&sys.diagram};
  std::vector<RuleMatch> out;
  for (std::size_t p = 0; p < w.tokens.size(); ++p) {
    RuleMatch m;
    if (match_reducer_at(c, w.tokens, p, &m) > 0) out.push_back(m);
  }
  for_each_homog_match(sys, c, w, w.tokens.size() + 2,
                       [&](const RuleMatch& m) { out.push_back(m); });
  std::stable_sort(out.begin(), out.end(),
                   [](const RuleMatch& a, const RuleMatch& b) { return a.pos < b.pos; });
  return out;
}

namespace {

// The terminal no-progress sweep dominates the cost of reduce and its result
// depends only on the starting word, so confirmed outcomes are memoized.
struct ReduceCache {
  std::mutex mu;
  std::unordered_map<std::string, ReduceResult> map;

  std::optional<ReduceResult> get(const std::string& k) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(k);
    if (it == map.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& k, const ReduceResult& r) {
    std::lock_guard<std::mutex> lock(mu);
    map.emplace(k, r);
  }
};

ReduceCache& reduce_cache() {
  static ReduceCache cache;
  return cache;
}

// the search is invariant under a global delta shift, so keys ignore delta
// and cached results store the delta change relative to the probe word
std::string reduce_cache_key(const RootSystem& sys, const SearchCaps& caps,
                             const Word& w) {
  std::string k = sys.diagram.name() + "|" + std::to_string(caps.max_extra_length) +
                  "|" + std::to_string(caps.max_visited) + "|";
  k.append(w.tokens.begin(), w.tokens.end());
  return k;
}

}  // namespace

ReduceResult reduce(const RootSystem& sys, const Word& w, const SearchCaps& caps) {
  Ctx c{&sys.diagram};
  Word start = greedy_shrink(sys, c, w);
  bool saturated = false;
  // shortest-first hunt so that shrinkable states surface before the
  // exploration budget is spent on expansions
  auto longer = [](const Word& a, const Word& b) {
    if (a.tokens.size() != b.tokens.size())
      return a.tokens.size() > b.tokens.size();
    if (a.tokens != b.tokens) return a.tokens > b.tokens;
    return a.delta > b.delta;
  };
  for (;;) {
    std::string ck = reduce_cache_key(sys, caps, start);
    if (auto hit = reduce_cache().get(ck)) {
      hit->word.delta += start.delta;
      hit->saturated = hit->saturated || saturated;
      return *hit;
    }
    std::size_t len_cap = start.tokens.size() + caps.max_extra_length;
    std::unordered_set<std::string> visited;
    std::priority_queue<Word, std::vector<Word>, decltype(longer)> queue(longer);
    visited.insert(word_key(start));
    queue.push(start);
    Word best = start;
    std::vector<Word> min_members;  // popped words of minimal length
    bool found_reduction = false;
    bool exhausted = false;
    while (!queue.empty()) {
      if (visited.size() >= caps.max_visited) {
        exhausted = true;
        break;
      }
      Word cur = queue.top();
      queue.pop();
      RuleMatch m;
      bool red = false;
      for (std::size_t p = 0; p < cur.tokens.size(); ++p)
        if (match_reducer_at(c, cur.tokens, p, &m) > 0) {
          red = true;
          break;
        }
      if (red) {
        start = greedy_shrink(sys, c, apply_rule_at(sys, cur, m));
        found_reduction = true;
        break;
      }
      // homogeneous shrinkers reached through the class also count as progress
      if (cur.tokens.size() < start.tokens.size()) {
        start = greedy_shrink(sys, c, cur);
        found_reduction = true;
        break;
      }
      if (word_less(cur, best)) best = cur;
      if (cur.tokens.size() == start.tokens.size()) min_members.push_back(cur);
      for_each_homog_neighbor(sys, c, cur, len_cap, [&](const Word& nxt) {
        std::string k = word_key(nxt);
        if (visited.size() < caps.max_visited && visited.insert(k).second)
          queue.push(nxt);
      });
    }
    if (found_reduction) continue;
    ReduceResult out{best, exhausted};
    if (!exhausted) {
      // a completed sweep saw every minimal-length member of the class, so
      // the outcome can be recorded for all of them (delta stored relative)
      for (const Word& m : min_members) {
        ReduceResult rel{Word{best.tokens, best.delta - m.delta}, exhausted};
        reduce_cache().put(reduce_cache_key(sys, caps, m), rel);
      }
    }
    out.saturated = out.saturated || saturated;
    return out;
  }
}

Equiv homog_equiv(const RootSystem& sys, const Word& a, const Word& b,
                  const SearchCaps& caps) {
  if (word_height(a) != word_height(b)) return Equiv::NotFoundWithinCaps;
  if (a == b) return Equiv::Equivalent;
  Ctx c{&sys.diagram};
  std::size_t len_cap =
      std::max(a.tokens.size(), b.tokens.size()) + caps.max_extra_length;
  std::unordered_set<std::string> vis[2];
  std::deque<Word> frontier[2];
  vis[0].insert(word_key(a));
  vis[1].insert(word_key(b));
  frontier[0].push_back(a);
  frontier[1].push_back(b);
  std::size_t total = 2;
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side = (frontier[0].size() <= frontier[1].size() && !frontier[0].empty())
                   ? 0
                   : 1;
    if (frontier[side].empty()) side = 1 - side;
    std::deque<Word> next;
    bool hit = false;
    for (const Word& cur : frontier[side]) {
      for_each_homog_neighbor(sys, c, cur, len_cap, [&](const Word& nxt) {
        if (hit) return;
        std::string k = word_key(nxt);
        if (vis[1 - side].count(k)) {
          hit = true;
          return;
        }
        if (total < caps.max_visited && vis[side].insert(k).second) {
          next.push_back(nxt);
          ++total;
        }
      });
      if (hit) return Equiv::Equivalent;
    }
    frontier[side] = std::move(next);
    if (total >= caps.max_visited) break;
  }
  return Equiv::NotFoundWithinCaps;
}

}  // namespace brauerlab
