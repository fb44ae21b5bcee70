#include "brauerlab/oracle_a.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace brauerlab {

namespace {

void normalize(BrauerDiagram& d) {
  for (auto& [a, b] : d.pairs)
    if (a > b) std::swap(a, b);
  std::sort(d.pairs.begin(), d.pairs.end());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BrauerDiagram identity_diagram(int m) {
  BrauerDiagram d;
  d.m = m;
  for (int i = 0; i < m; ++i) d.pairs.push_back({i, m + i});
  return d;
}

BrauerDiagram r_diagram(int m, int node) {
  if (node < 1 || node >= m) throw std::out_of_range("r node out of range");
  BrauerDiagram d = identity_diagram(m);
  d.pairs[node - 1] = {node - 1, m + node};
  d.pairs[node] = {node, m + node - 1};
  normalize(d);
  return d;
}

BrauerDiagram e_diagram(int m, int node) {
  if (node < 1 || node >= m) throw std::out_of_range("e node out of range");
  BrauerDiagram d = identity_diagram(m);
  d.pairs[node - 1] = {node - 1, node};
  d.pairs[node] = {m + node - 1, m + node};
  normalize(d);
  return d;
}

BrauerDiagram compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  if (d1.m != d2.m) throw std::invalid_argument("strand count mismatch");
  int m = d1.m;
  // nodes: 0..m-1 tops of d1, m..2m-1 the glued middle row, 2m..3m-1 bottoms
  // of d2. Endpoint ids in the result: tops 0..m-1, bottoms via -m shift.
  UnionFind uf(3 * m);
  for (auto& [a, b] : d1.pairs) uf.unite(a, b);  // d1 bottoms land on middle
  for (auto& [a, b] : d2.pairs) uf.unite(a + m, b + m);

  BrauerDiagram out;
  out.m = m;
  out.loops = d1.loops + d2.loops;

  std::vector<int> endpoint_of_root(3 * m, -1);
  std::vector<bool> root_has_endpoint(3 * m, false);
  for (int p = 0; p < 3 * m; ++p) {
    if (p >= m && p < 2 * m) continue;  // middle row
    int r = uf.find(p);
    root_has_endpoint[r] = true;
    if (endpoint_of_root[r] < 0) {
      endpoint_of_root[r] = p;
    } else {
      int q = endpoint_of_root[r];
      auto id = [m](int x) { return x < m ? x : x - m; };
      out.pairs.push_back({id(q), id(p)});
    }
  }
  std::vector<bool> counted(3 * m, false);
  for (int p = m; p < 2 * m; ++p) {
    int r = uf.find(p);
    if (!root_has_endpoint[r] && !counted[r]) {
      counted[r] = true;
      ++out.loops;
    }
  }
  normalize(out);
  return out;
}

BrauerDiagram eval_word_A(int m, const Word& w) {
  BrauerDiagram cur = identity_diagram(m);
  for (Tok t : w.tokens) {
    int node = tok_node(t);
    cur = compose(cur, tok_is_r(t) ? r_diagram(m, node) : e_diagram(m, node));
  }
  cur.loops += w.delta;
  return cur;
}

long long diagram_count(int m) {
  long long c = 1;
  for (int k = 3; k <= 2 * m - 1; k += 2) c *= k;
  return c;
}

namespace {

std::string point_name(int m, int p) {
  return p < m ? "t" + std::to_string(p + 1) : "b" + std::to_string(p - m + 1);
}

int point_from_name(int m, const std::string& s) {
  if (s.size() < 2 || (s[0] != 't' && s[0] != 'b'))
    throw std::invalid_argument("bad point name: " + s);
  int i = std::atoi(s.c_str() + 1);
  if (i < 1 || i > m) throw std::invalid_argument("bad point name: " + s);
  return s[0] == 't' ? i - 1 : m + i - 1;
}

}  // namespace

std::string diagram_to_json(const BrauerDiagram& d) {
  nlohmann::json j;
  j["m"] = d.m;
  j["loops"] = d.loops;
  j["pairs"] = nlohmann::json::array();
  for (auto& [a, b] : d.pairs)
    j["pairs"].push_back({point_name(d.m, a), point_name(d.m, b)});
  return j.dump();
}

BrauerDiagram diagram_from_json(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  BrauerDiagram d;
  d.m = j.at("m").get<int>();
  d.loops = j.at("loops").get<int>();
  for (auto& p : j.at("pairs"))
    d.pairs.push_back({point_from_name(d.m, p.at(0).get<std::string>()),
                       point_from_name(d.m, p.at(1).get<std::string>())});
  normalize(d);
  return d;
}

}  // namespace brauerlab
