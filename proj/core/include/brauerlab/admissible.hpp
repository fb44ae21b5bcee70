#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauerlab/rootsystem.hpp"

namespace brauerlab {

// Admissible set as a sorted vector of positive-root indices.
using SetIdx = std::vector<int>;

std::string set_key(const SetIdx& B);
SetIdx set_from_roots(const RootSystem& sys, const std::vector<Root>& roots);
std::vector<Root> set_roots(const RootSystem& sys, const SetIdx& B);

bool is_orthogonal(const RootSystem& sys, const SetIdx& X);
bool is_admissible(const RootSystem& sys, const SetIdx& X);
SetIdx closure(const RootSystem& sys, const SetIdx& X);

SetIdx act_r(const RootSystem& sys, int node, const SetIdx& B);
// reflection in an arbitrary positive root (by index)
SetIdx act_refl(const RootSystem& sys, int beta_idx, const SetIdx& B);
SetIdx act_e(const RootSystem& sys, int node, const SetIdx& B);

enum class Compare { Fixed, Raising, Lowering };
Compare compare_node(const RootSystem& sys, int node, const SetIdx& B);

struct OrbitPoset {
  std::vector<SetIdx> members;
  std::unordered_map<std::string, int> index;
  // (member, node, target) with r_node members[member] = members[target] raising
  std::vector<std::array<int, 3>> cover_edges;
  std::vector<int> heights;
  int max_element = -1;
  int base = -1;

  int find(const SetIdx& B) const;
  std::vector<int> height0() const;
  int size() const { return static_cast<int>(members.size()); }
};

OrbitPoset enumerate_orbit(const RootSystem& sys, const SetIdx& B0,
                           std::size_t member_cap = 10'000'000);

struct Level {
  int set_height = 0;
  std::vector<int> root_heights;  // ascending

  friend bool operator<(const Level& a, const Level& b) {
    if (a.set_height != b.set_height) return a.set_height < b.set_height;
    return a.root_heights < b.root_heights;
  }
  friend bool operator==(const Level& a, const Level& b) {
    return a.set_height == b.set_height && a.root_heights == b.root_heights;
  }
};

Level level_of(const RootSystem& sys, const OrbitPoset& orbit, const SetIdx& B);

struct Coclique {
  std::vector<int> nodes;  // sorted, pairwise non-adjacent

  friend bool operator==(const Coclique& a, const Coclique& b) {
    return a.nodes == b.nodes;
  }
};

bool is_e_type(const RootSystem& sys);
// E types: the hardcoded list including the empty coclique.
std::vector<Coclique> cocliques_Y(const RootSystem& sys);
// B_Y = admissible closure of the simple roots indexed by Y
SetIdx coclique_base(const RootSystem& sys, const Coclique& Y);
// E types: the Y in the table with |B_Y| = |B|
Coclique classify_orbit(const RootSystem& sys, const SetIdx& B);

// all (k, j) with j~k, alpha_j in B, het(e_k B) = het(B), L(e_k B) < L(B)
std::vector<std::pair<int, int>> lowering_e_nodes(const RootSystem& sys,
                                                  const OrbitPoset& orbit,
                                                  const SetIdx& B);

// type decomposition of the diagram induced on the given nodes
std::vector<CoxeterDiagram> classify_induced(const CoxeterDiagram& d,
                                             const std::vector<int>& nodes);
// diagram induced on nodes whose simple roots are orthogonal to the orbit max
std::vector<CoxeterDiagram> m_y_type(const RootSystem& sys, const OrbitPoset& orbit);
// type decomposition of the root subsystem orthogonal to B
std::vector<CoxeterDiagram> subsystem_type(const RootSystem& sys, const SetIdx& B);

long long weyl_order(const CoxeterDiagram& d);
long long weyl_order(const std::vector<CoxeterDiagram>& ds);
std::string types_name(const std::vector<CoxeterDiagram>& ds);  // "A1 A3", "-"

int count_containing(const RootSystem& sys, const OrbitPoset& orbit, int node);

// --- orbit cache -----------------------------------------------------------

std::string default_cache_dir();  // BRAUERLAB_CACHE or ./cache
void save_orbit(const RootSystem& sys, const OrbitPoset& orbit,
                const std::string& path);
std::optional<OrbitPoset> load_orbit(const RootSystem& sys,
                                     const std::string& path);
// in-memory (and optionally on-disk) cached orbit of B_Y
const OrbitPoset& orbit_of(const RootSystem& sys, const Coclique& Y,
                           bool use_disk_cache = false);
// cached orbit of the W-orbit containing B (E types classify by size)
const OrbitPoset& orbit_containing(const RootSystem& sys, const SetIdx& B,
                                   bool use_disk_cache = false);

}  // namespace brauerlab
