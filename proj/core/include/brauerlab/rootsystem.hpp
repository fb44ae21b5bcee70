#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauerlab {

enum class DiagramKind { A, D, E6, E7, E8 };

// Simply laced Coxeter diagram with Bourbaki labeling for the E types:
// E6 edges {1-3, 3-4, 4-5, 5-6, 2-4}; E7 adds 6-7; E8 adds 7-8.
struct CoxeterDiagram {
  DiagramKind kind;
  int n = 0;  // nodes are 1..n
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int i, int j) const;
  std::vector<int> neighbors(int i) const;
  std::string name() const;

  static CoxeterDiagram make(DiagramKind kind, int rank = 0);
  // "A4", "D5", "E6", ...
  static CoxeterDiagram parse(const std::string& s);
};

// Integer coefficient vector over the simple basis.
using Root = std::vector<int>;

int root_height(const Root& v);
bool root_positive(const Root& v);
Root positive_rep(const Root& v);

struct RootSystem {
  CoxeterDiagram diagram;
  std::vector<Root> positive_roots;        // sorted by (height, lex)
  std::vector<std::vector<int>> gram;      // Cartan matrix, 0-based

  int rank() const { return diagram.n; }
  int num_roots() const { return static_cast<int>(positive_roots.size()); }

  // index of the positive representative in positive_roots, -1 if not a root
  int root_index(const Root& r) const;
  int simple_index(int node) const { return simple_idx_[node - 1]; }

  int inner_idx(int a, int b) const { return inner_pp_[a][b]; }
  // index of +-r_node(positive_roots[a])
  int reflect_simple_idx(int node, int a) const {
    return reflect_simple_[node - 1][a];
  }
  int height_idx(int a) const { return heights_[a]; }

  // internal tables, filled by build_root_system
  std::map<Root, int> index_;
  std::vector<int> simple_idx_;
  std::vector<std::vector<int>> inner_pp_;
  std::vector<std::vector<int>> reflect_simple_;
  std::vector<int> heights_;
};

RootSystem build_root_system(const CoxeterDiagram& diagram);

int inner(const RootSystem& sys, const Root& a, const Root& b);
Root reflect(const RootSystem& sys, const Root& mirror, const Root& v);
Root simple_root(int n, int node);

// "a<i>" or "c1,c2,...,cn"
Root parse_root(const RootSystem& sys, const std::string& s);
std::string root_to_string(const Root& r);

}  // namespace brauerlab
