#include "brauerlab/rootsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace brauerlab {

bool CoxeterDiagram::adjacent(int i, int j) const {
  for (auto& [a, b] : edges)
    if ((a == i && b == j) || (a == j && b == i)) return true;
  return false;
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (auto& [a, b] : edges) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CoxeterDiagram::name() const {
  switch (kind) {
    case DiagramKind::A: return "A" + std::to_string(n);
    case DiagramKind::D: return "D" + std::to_string(n);
    case DiagramKind::E6: return "E6";
    case DiagramKind::E7: return "E7";
    case DiagramKind::E8: return "E8";
  }
  return "?";
}

CoxeterDiagram CoxeterDiagram::make(DiagramKind kind, int rank) {
  CoxeterDiagram d;
  d.kind = kind;
  switch (kind) {
    case DiagramKind::A:
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      d.n = rank;
      for (int i = 1; i < rank; ++i) d.edges.push_back({i, i + 1});
      break;
    case DiagramKind::D:
      if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
      d.n = rank;
      // chain 1-2-...-(n-1), branch node n attached to n-2
      for (int i = 1; i < rank - 1; ++i) d.edges.push_back({i, i + 1});
      d.edges.push_back({rank - 2, rank});
      break;
    case DiagramKind::E6:
    case DiagramKind::E7:
    case DiagramKind::E8: {
      d.n = kind == DiagramKind::E6 ? 6 : kind == DiagramKind::E7 ? 7 : 8;
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (d.n >= 7) d.edges.push_back({6, 7});
      if (d.n >= 8) d.edges.push_back({7, 8});
      break;
    }
  }
  return d;
}

CoxeterDiagram CoxeterDiagram::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad diagram name: " + s);
  char t = s[0];
  int rank = std::atoi(s.c_str() + 1);
  switch (t) {
    case 'A': case 'a': return make(DiagramKind::A, rank);
    case 'D': case 'd': return make(DiagramKind::D, rank);
    case 'E': case 'e':
      if (rank == 6) return make(DiagramKind::E6);
      if (rank == 7) return make(DiagramKind::E7);
      if (rank == 8) return make(DiagramKind::E8);
      throw std::invalid_argument("unsupported E rank: " + s);
  }
  throw std::invalid_argument("bad diagram name: " + s);
}

int root_height(const Root& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

bool root_positive(const Root& v) {
  for (int c : v) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

Root positive_rep(const Root& v) {
  if (root_positive(v)) return v;
  Root w(v);
  for (int& c : w) c = -c;
  return w;
}

Root simple_root(int n, int node) {
  Root r(n, 0);
  r[node - 1] = 1;
  return r;
}

int inner(const RootSystem& sys, const Root& a, const Root& b) {
  int n = sys.rank();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) s += a[i] * sys.gram[i][j] * b[j];
  }
  return s;
}

Root reflect(const RootSystem& sys, const Root& mirror, const Root& v) {
  if (sys.root_index(mirror) < 0) throw std::invalid_argument("mirror is not a root");
  int c = inner(sys, v, mirror);
  Root out(v);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= c * mirror[i];
  return out;
}

static bool root_order(const Root& a, const Root& b) {
  int ha = root_height(a), hb = root_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

RootSystem build_root_system(const CoxeterDiagram& diagram) {
  RootSystem sys;
  sys.diagram = diagram;
  int n = diagram.n;
  sys.gram.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) sys.gram[i][i] = 2;
  for (auto& [a, b] : diagram.edges) {
    sys.gram[a - 1][b - 1] = -1;
    sys.gram[b - 1][a - 1] = -1;
  }

  std::set<Root> pos;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    Root a = simple_root(n, i);
    pos.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = 0; j < n; ++j) c += sys.gram[i - 1][j] * b[j];
        Root rb(b);
        rb[i - 1] -= c;
        Root p = positive_rep(rb);
        if (pos.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }

  sys.positive_roots.assign(pos.begin(), pos.end());
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end(), root_order);

  int m = sys.num_roots();
  for (int a = 0; a < m; ++a) sys.index_[sys.positive_roots[a]] = a;
  sys.simple_idx_.resize(n);
  for (int i = 1; i <= n; ++i) sys.simple_idx_[i - 1] = sys.index_.at(simple_root(n, i));
  sys.heights_.resize(m);
  for (int a = 0; a < m; ++a) sys.heights_[a] = root_height(sys.positive_roots[a]);

  sys.inner_pp_.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int v = inner(sys, sys.positive_roots[a], sys.positive_roots[b]);
      sys.inner_pp_[a][b] = v;
      sys.inner_pp_[b][a] = v;
    }

  sys.reflect_simple_.assign(n, std::vector<int>(m, -1));
  for (int i = 1; i <= n; ++i)
    for (int a = 0; a < m; ++a) {
      Root r = sys.positive_roots[a];
      int c = sys.inner_pp_[a][sys.simple_idx_[i - 1]];
      r[i - 1] -= c;
      sys.reflect_simple_[i - 1][a] = sys.index_.at(positive_rep(r));
    }
  return sys;
}

int RootSystem::root_index(const Root& r) const {
  auto it = index_.find(positive_rep(r));
  return it == index_.end() ? -1 : it->second;
}

Root parse_root(const RootSystem& sys, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty root");
  if (s[0] == 'a' || s[0] == 'A') {
    int node = std::atoi(s.c_str() + 1);
    if (node < 1 || node > sys.rank())
      throw std::invalid_argument("bad simple root: " + s);
    return simple_root(sys.rank(), node);
  }
  Root r;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) r.push_back(std::atoi(part.c_str()));
  if (static_cast<int>(r.size()) != sys.rank())
    throw std::invalid_argument("bad coefficient count in root: " + s);
  return r;
}

std::string root_to_string(const Root& r) {
  std::string out;
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out;
}

}  // namespace brauerlab
