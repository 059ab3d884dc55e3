#pragma once

#include <optional>
#include <vector>

#include "eulertrail/core.hpp"

namespace eulertrail {

struct CutCertificate {
  std::vector<int> side_s;
  std::vector<int> side_t;
  ArcSet crossing;  // every arc from side_s to side_t
};

struct ArcConnectivity {
  int lambda = 0;
  std::optional<CutCertificate> cut;  // present when n >= 2
};

struct PathsOrCut {
  std::vector<std::vector<int>> paths;  // vertex sequences
  std::optional<CutCertificate> cut;
  bool found() const { return !cut.has_value(); }
};

std::vector<char> reachable_from(const Digraph& d, int s, bool backwards = false);
bool is_strong(const Digraph& d);
// acyclic order: no arc goes from a later component to an earlier one
std::vector<std::vector<int>> strong_components(const Digraph& d);
ArcSet cut_arcs(const Digraph& d);
ArcConnectivity arc_connectivity(const Digraph& d);
// cheaper than arc_connectivity when only a threshold matters
bool is_k_arc_strong(const Digraph& d, int k);
PathsOrCut arc_disjoint_paths(const Digraph& d, int x, int y, int k);

CutCertificate make_cut(const Digraph& d, const std::vector<char>& in_s);
bool validate_cut(const Digraph& d, const CutCertificate& c);

}  // namespace eulertrail
