#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eulertrail/connectivity.hpp"
#include "eulertrail/core.hpp"

namespace eulertrail {

struct Trail {
  std::vector<int> vertices;  // v_0..v_p
};

enum class TrailBranch {
  xy_arc,             // x->y: cycle around P1 = xy
  yx_cut_arc,         // x->y but yx is a cut-arc: hamiltonian cycle minus yx
  dprime_not_strong,  // y->x only and D - yx not strong
  h_strong,           // D - yx - A(P1) strong
  split_y,            // terminal part Y holds x and y; recurse on D<Y> + w1y
  split_x,            // x and y outside a terminal part; recurse on the rest + xw
};
const char* branch_name(TrailBranch b);
constexpr int kTrailBranches = 6;

class TrailCertificateError : public Error {
 public:
  TrailCertificateError(const std::string& msg, CutCertificate c) : Error(msg), cut(std::move(c)) {}
  CutCertificate cut;
};

ArcSet trail_arcs(const Trail& t);

// Two arc-disjoint (x,y)-paths whose union has as few arcs as possible (ties:
// lexicographically smallest arc set); the first is the shortest (x,y)-path in
// the union. nullopt when there are no two such paths.
std::optional<std::pair<std::vector<int>, std::vector<int>>> minimal_path_pair(const Digraph& d,
                                                                               int x, int y);

// spanning (x,y)-trail avoiding yx; out-degree at most 2 everywhere
Trail spanning_trail(const Digraph& d, int x, int y, std::vector<TrailBranch>* branches = nullptr);

bool validate_trail(const Digraph& d, const Trail& t, int x, int y, bool spanning);

struct EulerConnectedResult {
  bool connected = false;
  std::optional<std::pair<int, int>> failing;
};
EulerConnectedResult is_eulerian_connected(const Digraph& d);

}  // namespace eulertrail
