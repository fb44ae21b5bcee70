#include "brauerlab/admissible.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace brauerlab {

std::string set_key(const SetIdx& B) {
  std::string k;
  k.reserve(B.size());
  for (int i : B) k.push_back(static_cast<char>(i));
  return k;
}

SetIdx set_from_roots(const RootSystem& sys, const std::vector<Root>& roots) {
  SetIdx B;
  for (const Root& r : roots) {
    int idx = sys.root_index(r);
    if (idx < 0) throw std::invalid_argument("not a root: " + root_to_string(r));
    B.push_back(idx);
  }
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  return B;
}

std::vector<Root> set_roots(const RootSystem& sys, const SetIdx& B) {
  std::vector<Root> out;
  for (int i : B) out.push_back(sys.positive_roots[i]);
  return out;
}

bool is_orthogonal(const RootSystem& sys, const SetIdx& X) {
  for (size_t a = 0; a < X.size(); ++a)
    for (size_t b = a + 1; b < X.size(); ++b)
      if (sys.inner_idx(X[a], X[b]) != 0) return false;
  return true;
}

// If a violating triple is found, reports the missing element.
static bool admissible_defect(const RootSystem& sys, const SetIdx& X, int* missing) {
  int m = sys.num_roots();
  int n = sys.rank();
  for (int b = 0; b < m; ++b) {
    std::vector<int> g;
    for (int x : X)
      if (std::abs(sys.inner_idx(b, x)) == 1) g.push_back(x);
    if (g.size() < 3) continue;
    const Root& beta = sys.positive_roots[b];
    for (size_t p = 0; p < g.size(); ++p)
      for (size_t q = p + 1; q < g.size(); ++q)
        for (size_t s = q + 1; s < g.size(); ++s) {
          Root v(n, 0);
          for (int i = 0; i < n; ++i) v[i] = 2 * beta[i];
          for (int x : {g[p], g[q], g[s]}) {
            int c = sys.inner_idx(b, x);
            for (int i = 0; i < n; ++i) v[i] -= c * sys.positive_roots[x][i];
          }
          int idx = sys.root_index(v);
          if (idx < 0) throw std::logic_error("admissibility sum is not a root");
          if (!std::binary_search(X.begin(), X.end(), idx)) {
            if (missing) *missing = idx;
            return true;
          }
        }
  }
  return false;
}

bool is_admissible(const RootSystem& sys, const SetIdx& X) {
  if (!is_orthogonal(sys, X))
    throw std::invalid_argument("set is not orthogonal");
  return !admissible_defect(sys, X, nullptr);
}

SetIdx closure(const RootSystem& sys, const SetIdx& X) {
  if (!is_orthogonal(sys, X))
    throw std::invalid_argument("set is not orthogonal");
  SetIdx cur(X);
  std::sort(cur.begin(), cur.end());
  int missing = -1;
  while (admissible_defect(sys, cur, &missing)) {
    for (int x : cur)
      if (sys.inner_idx(missing, x) != 0)
        throw std::logic_error("closure broke orthogonality");
    cur.insert(std::lower_bound(cur.begin(), cur.end(), missing), missing);
  }
  return cur;
}

SetIdx act_r(const RootSystem& sys, int node, const SetIdx& B) {
  SetIdx out;
  out.reserve(B.size());
  for (int x : B) out.push_back(sys.reflect_simple_idx(node, x));
  std::sort(out.begin(), out.end());
  return out;
}

SetIdx act_refl(const RootSystem& sys, int beta_idx, const SetIdx& B) {
  const Root& mirror = sys.positive_roots[beta_idx];
  SetIdx out;
  out.reserve(B.size());
  for (int x : B) {
    Root v = sys.positive_roots[x];
    int c = sys.inner_idx(x, beta_idx);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= c * mirror[i];
    out.push_back(sys.root_index(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetIdx act_e(const RootSystem& sys, int node, const SetIdx& B) {
  int ai = sys.simple_index(node);
  if (std::binary_search(B.begin(), B.end(), ai)) return B;
  int beta = -1;
  for (int x : B)
    if (sys.inner_idx(ai, x) != 0) { beta = x; break; }
  if (beta < 0) {
    SetIdx X(B);
    X.insert(std::lower_bound(X.begin(), X.end(), ai), ai);
    return closure(sys, X);
  }
  return act_refl(sys, beta, act_r(sys, node, B));
}

Compare compare_node(const RootSystem& sys, int node, const SetIdx& B) {
  SetIdx rB = act_r(sys, node, B);
  if (rB == B) return Compare::Fixed;
  int hmin = -1;
  bool lowering = false;
  for (int x : B) {
    if (std::binary_search(rB.begin(), rB.end(), x)) continue;
    int h = sys.height_idx(x);
    if (hmin < 0 || h < hmin) {
      hmin = h;
      lowering = false;
    }
    if (h == hmin && sys.height_idx(sys.reflect_simple_idx(node, x)) < h)
      lowering = true;
  }
  return lowering ? Compare::Lowering : Compare::Raising;
}

int OrbitPoset::find(const SetIdx& B) const {
  auto it = index.find(set_key(B));
  return it == index.end() ? -1 : it->second;
}

std::vector<int> OrbitPoset::height0() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (heights[i] == 0) out.push_back(i);
  return out;
}

static void finish_orbit(const RootSystem& sys, OrbitPoset& orbit,
                         const SetIdx& B0) {
  int n = sys.rank();
  std::vector<std::vector<int>> up(orbit.size());
  for (int m = 0; m < orbit.size(); ++m) {
    for (int i = 1; i <= n; ++i) {
      SetIdx t = act_r(sys, i, orbit.members[m]);
      if (t == orbit.members[m]) continue;
      int ti = orbit.find(t);
      if (compare_node(sys, i, orbit.members[m]) == Compare::Raising) {
        orbit.cover_edges.push_back({m, i, ti});
        up[m].push_back(ti);
      }
    }
  }
  orbit.max_element = -1;
  for (int m = 0; m < orbit.size(); ++m)
    if (up[m].empty()) {
      if (orbit.max_element >= 0)
        throw std::logic_error("orbit has multiple maximal elements");
      orbit.max_element = m;
    }
  if (orbit.max_element < 0) throw std::logic_error("orbit has no maximal element");

  std::vector<std::vector<int>> down(orbit.size());
  for (auto& [m, i, t] : orbit.cover_edges) down[t].push_back(m);
  std::vector<int> dist(orbit.size(), -1);
  std::deque<int> q{orbit.max_element};
  dist[orbit.max_element] = 0;
  int d = 0;
  while (!q.empty()) {
    int m = q.front();
    q.pop_front();
    d = std::max(d, dist[m]);
    for (int t : down[m])
      if (dist[t] < 0) {
        dist[t] = dist[m] + 1;
        q.push_back(t);
      }
  }
  orbit.heights.resize(orbit.size());
  for (int m = 0; m < orbit.size(); ++m) {
    if (dist[m] < 0) throw std::logic_error("orbit Hasse diagram is disconnected");
    orbit.heights[m] = d - dist[m];
  }
  int b0 = orbit.find(B0);
  if (b0 >= 0 && orbit.heights[b0] == 0) {
    orbit.base = b0;
  } else {
    orbit.base = -1;
    for (int m = 0; m < orbit.size(); ++m)
      if (orbit.heights[m] == 0) { orbit.base = m; break; }
  }
}

OrbitPoset enumerate_orbit(const RootSystem& sys, const SetIdx& B0,
                           std::size_t member_cap) {
  OrbitPoset orbit;
  int n = sys.rank();
  orbit.members.push_back(B0);
  orbit.index[set_key(B0)] = 0;
  for (size_t head = 0; head < orbit.members.size(); ++head) {
    SetIdx cur = orbit.members[head];
    for (int i = 1; i <= n; ++i) {
      SetIdx t = act_r(sys, i, cur);
      std::string k = set_key(t);
      if (orbit.index.emplace(k, orbit.members.size()).second) {
        orbit.members.push_back(std::move(t));
        if (orbit.members.size() > member_cap)
          throw std::runtime_error("orbit exceeds member cap");
      }
    }
  }
  finish_orbit(sys, orbit, B0);
  return orbit;
}

Level level_of(const RootSystem& sys, const OrbitPoset& orbit, const SetIdx& B) {
  int m = orbit.find(B);
  if (m < 0) throw std::invalid_argument("set not in orbit");
  Level lv;
  lv.set_height = orbit.heights[m];
  for (int x : B) lv.root_heights.push_back(sys.height_idx(x));
  std::sort(lv.root_heights.begin(), lv.root_heights.end());
  return lv;
}

bool is_e_type(const RootSystem& sys) {
  auto k = sys.diagram.kind;
  return k == DiagramKind::E6 || k == DiagramKind::E7 || k == DiagramKind::E8;
}

std::vector<Coclique> cocliques_Y(const RootSystem& sys) {
  switch (sys.diagram.kind) {
    case DiagramKind::E6:
      return {{{}}, {{6}}, {{4, 6}}, {{2, 3, 6}}};
    case DiagramKind::E7:
      return {{{}}, {{7}}, {{5, 7}}, {{2, 5, 7}}, {{2, 3, 7}}, {{2, 3, 5, 7}}};
    case DiagramKind::E8:
      return {{{}}, {{8}}, {{6, 8}}, {{2, 3, 8}}, {{2, 3, 5, 8}}};
    default:
      throw std::invalid_argument("coclique table only covers E types");
  }
}

SetIdx coclique_base(const RootSystem& sys, const Coclique& Y) {
  SetIdx X;
  for (int i : Y.nodes) X.push_back(sys.simple_index(i));
  std::sort(X.begin(), X.end());
  return closure(sys, X);
}

Coclique classify_orbit(const RootSystem& sys, const SetIdx& B) {
  for (const Coclique& Y : cocliques_Y(sys))
    if (coclique_base(sys, Y).size() == B.size()) return Y;
  throw std::invalid_argument("set size matches no orbit in the table");
}

std::vector<std::pair<int, int>> lowering_e_nodes(const RootSystem& sys,
                                                  const OrbitPoset& orbit,
                                                  const SetIdx& B) {
  std::vector<std::pair<int, int>> out;
  Level lb = level_of(sys, orbit, B);
  for (int k = 1; k <= sys.rank(); ++k) {
    int ak = sys.simple_index(k);
    if (std::binary_search(B.begin(), B.end(), ak)) continue;
    std::vector<int> js;
    for (int j : sys.diagram.neighbors(k))
      if (std::binary_search(B.begin(), B.end(), sys.simple_index(j)))
        js.push_back(j);
    if (js.empty()) continue;
    SetIdx ekB = act_e(sys, k, B);
    int mi = orbit.find(ekB);
    if (mi < 0) continue;
    Level le = level_of(sys, orbit, ekB);
    if (le.set_height != lb.set_height || !(le < lb)) continue;
    if (js.size() != 1)
      throw std::logic_error("lowering-e-node partner is not unique");
    out.push_back({k, js.front()});
  }
  return out;
}

std::vector<CoxeterDiagram> classify_induced(const CoxeterDiagram& d,
                                             const std::vector<int>& nodes) {
  std::vector<std::vector<int>> adj(nodes.size());
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = 0; b < nodes.size(); ++b)
      if (a != b && d.adjacent(nodes[a], nodes[b])) adj[a].push_back(b);

  std::vector<CoxeterDiagram> out;
  std::vector<char> seen(nodes.size(), 0);
  for (size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> q{static_cast<int>(s)};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    int sz = static_cast<int>(comp.size());
    int branch = -1;
    bool path = true;
    for (int v : comp) {
      if (adj[v].size() > 3) throw std::logic_error("node of degree > 3");
      if (adj[v].size() == 3) {
        if (branch >= 0) throw std::logic_error("two branch nodes");
        branch = v;
        path = false;
      }
    }
    if (path) {
      out.push_back(CoxeterDiagram::make(DiagramKind::A, sz));
      continue;
    }
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      for (;;) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) throw std::logic_error("not a simply laced spherical diagram");
    if (arms[1] == 1) {
      out.push_back(CoxeterDiagram::make(DiagramKind::D, arms[2] + 3));
    } else if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      DiagramKind k = arms[2] == 2   ? DiagramKind::E6
                      : arms[2] == 3 ? DiagramKind::E7
                                     : DiagramKind::E8;
      out.push_back(CoxeterDiagram::make(k));
    } else {
      throw std::logic_error("not a simply laced spherical diagram");
    }
  }
  std::sort(out.begin(), out.end(), [](const CoxeterDiagram& a, const CoxeterDiagram& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.n < b.n;
  });
  return out;
}

std::vector<CoxeterDiagram> m_y_type(const RootSystem& sys, const OrbitPoset& orbit) {
  const SetIdx& top = orbit.members[orbit.max_element];
  std::vector<int> nodes;
  for (int i = 1; i <= sys.rank(); ++i) {
    bool perp = true;
    for (int x : top)
      if (sys.inner_idx(sys.simple_index(i), x) != 0) perp = false;
    if (perp) nodes.push_back(i);
  }
  return classify_induced(sys.diagram, nodes);
}

std::vector<CoxeterDiagram> subsystem_type(const RootSystem& sys, const SetIdx& B) {
  std::vector<int> P;
  for (int b = 0; b < sys.num_roots(); ++b) {
    bool perp = true;
    for (int x : B)
      if (sys.inner_idx(b, x) != 0) perp = false;
    if (perp) P.push_back(b);
  }
  std::set<int> pset(P.begin(), P.end());
  std::vector<int> simples;
  for (int p : P) {
    bool sum = false;
    for (int q : P) {
      if (q == p) continue;
      Root v = sys.positive_roots[p];
      const Root& w = sys.positive_roots[q];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      if (root_positive(v)) {
        int idx = sys.root_index(v);
        if (idx >= 0 && v == sys.positive_roots[idx] && pset.count(idx)) {
          sum = true;
          break;
        }
      }
    }
    if (!sum) simples.push_back(p);
  }
  // build an abstract diagram on the simple system of the subsystem
  CoxeterDiagram abs;
  abs.kind = DiagramKind::A;
  abs.n = static_cast<int>(simples.size());
  for (size_t a = 0; a < simples.size(); ++a)
    for (size_t b = a + 1; b < simples.size(); ++b)
      if (sys.inner_idx(simples[a], simples[b]) != 0)
        abs.edges.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1)});
  std::vector<int> all(abs.n);
  for (int i = 0; i < abs.n; ++i) all[i] = i + 1;
  return classify_induced(abs, all);
}

long long weyl_order(const CoxeterDiagram& d) {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (d.kind) {
    case DiagramKind::A: return fact(d.n + 1);
    case DiagramKind::D: return (1LL << (d.n - 1)) * fact(d.n);
    case DiagramKind::E6: return 51840LL;
    case DiagramKind::E7: return 2903040LL;
    case DiagramKind::E8: return 696729600LL;
  }
  return 1;
}

long long weyl_order(const std::vector<CoxeterDiagram>& ds) {
  long long p = 1;
  for (const auto& d : ds) p *= weyl_order(d);
  return p;
}

std::string types_name(const std::vector<CoxeterDiagram>& ds) {
  if (ds.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < ds.size(); ++i) {
    if (i) out += " ";
    out += ds[i].name();
  }
  return out;
}

int count_containing(const RootSystem& sys, const OrbitPoset& orbit, int node) {
  int a = sys.simple_index(node);
  int c = 0;
  for (const SetIdx& B : orbit.members)
    if (std::binary_search(B.begin(), B.end(), a)) ++c;
  return c;
}

// --- orbit cache -----------------------------------------------------------

static constexpr int kCacheVersion = 1;

std::string default_cache_dir() {
  const char* env = std::getenv("BRAUERLAB_CACHE");
  return env && *env ? env : "./cache";
}

void save_orbit(const RootSystem& sys, const OrbitPoset& orbit,
                const std::string& path) {
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["type"] = sys.diagram.name();
  j["size"] = orbit.members.empty() ? 0 : orbit.members[0].size();
  nlohmann::json members = nlohmann::json::array();
  for (const SetIdx& B : orbit.members) {
    nlohmann::json roots = nlohmann::json::array();
    for (int x : B) roots.push_back(sys.positive_roots[x]);
    members.push_back(roots);
  }
  j["members"] = members;
  nlohmann::json edges = nlohmann::json::array();
  for (auto& [m, i, t] : orbit.cover_edges) edges.push_back({m, i, t});
  j["edges"] = edges;
  j["heights"] = orbit.heights;
  j["max"] = orbit.max_element;
  j["base"] = orbit.base;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << j.dump() << "\n";
}

std::optional<OrbitPoset> load_orbit(const RootSystem& sys,
                                     const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  if (!j.contains("version") || j["version"] != kCacheVersion) return std::nullopt;
  if (j.value("type", std::string()) != sys.diagram.name()) return std::nullopt;
  OrbitPoset orbit;
  try {
    for (const auto& roots : j.at("members")) {
      SetIdx B;
      for (const auto& r : roots) {
        Root v = r.get<Root>();
        int idx = sys.root_index(v);
        if (idx < 0) return std::nullopt;
        B.push_back(idx);
      }
      std::sort(B.begin(), B.end());
      orbit.index[set_key(B)] = static_cast<int>(orbit.members.size());
      orbit.members.push_back(std::move(B));
    }
    for (const auto& e : j.at("edges"))
      orbit.cover_edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    orbit.heights = j.at("heights").get<std::vector<int>>();
    orbit.max_element = j.at("max").get<int>();
    orbit.base = j.at("base").get<int>();
  } catch (...) {
    return std::nullopt;
  }
  if (orbit.heights.size() != orbit.members.size()) return std::nullopt;
  return orbit;
}

const OrbitPoset& orbit_of(const RootSystem& sys, const Coclique& Y,
                           bool use_disk_cache) {
  static std::map<std::string, OrbitPoset> registry;
  SetIdx B = coclique_base(sys, Y);
  std::string key = sys.diagram.name() + "/" + std::to_string(B.size());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  if (use_disk_cache) {
    std::string path = default_cache_dir() + "/orbit-" + sys.diagram.name() +
                       "-" + std::to_string(B.size()) + ".json";
    if (auto loaded = load_orbit(sys, path)) {
      return registry.emplace(key, std::move(*loaded)).first->second;
    }
    OrbitPoset orbit = enumerate_orbit(sys, B);
    std::filesystem::create_directories(default_cache_dir());
    save_orbit(sys, orbit, path);
    return registry.emplace(key, std::move(orbit)).first->second;
  }
  return registry.emplace(key, enumerate_orbit(sys, B)).first->second;
}

const OrbitPoset& orbit_containing(const RootSystem& sys, const SetIdx& B,
                                   bool use_disk_cache) {
  if (is_e_type(sys)) return orbit_of(sys, classify_orbit(sys, B), use_disk_cache);
  static std::map<std::string, OrbitPoset> registry;
  for (auto& [k, orbit] : registry)
    if (k.rfind(sys.diagram.name() + "#", 0) == 0 && orbit.find(B) >= 0)
      return orbit;
  OrbitPoset orbit = enumerate_orbit(sys, B);
  std::string key = sys.diagram.name() + "#" + set_key(orbit.members[orbit.base]);
  return registry.emplace(key, std::move(orbit)).first->second;
}

}  // namespace brauerlab
