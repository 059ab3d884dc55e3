#pragma once

#include <functional>
#include <vector>

#include "eulertrail/core.hpp"

namespace eulertrail {

// Brute force ground truth. Nothing here calls into the constructive modules.

struct OracleQuery {
  std::vector<int> demand;  // out - in per vertex; empty means all zero
  ArcSet must_contain;
  ArcSet must_avoid;
  bool connected = true;        // arc set weakly connected and touching every vertex
  bool positive_degree = true;  // every vertex has an arc
  bool lone_vertex_ok = true;   // n = 1 passes the degree test with no arcs
  long long limit = -1;         // stop after this many results (-1: all)
};

// free-arc count up to which the plain subset sweep is used
constexpr int kSweepArcs = 24;
// largest order the pruned search accepts
constexpr int kDfsOrder = 10;
constexpr int kTournamentOrder = 5;
constexpr int kSemicompleteOrder = 4;

// EULERTRAIL_ORACLE_LIMIT, or -1 when unset
int oracle_limit_override();

std::vector<ArcSet> oracle_search(const Digraph& d, const OracleQuery& q);

std::vector<ArcSet> enumerate_spanning_eulerian(const Digraph& d, const ArcSet& must_contain = {},
                                                const ArcSet& must_avoid = {}, long long limit = -1);
bool oracle_has_spanning_eulerian(const Digraph& d, const ArcSet& must_contain = {},
                                  const ArcSet& must_avoid = {});
bool oracle_eulerian_factor(const Digraph& d, const ArcSet& avoid = {});
bool oracle_spanning_trail_exists(const Digraph& d, int x, int y, const ArcSet& must_avoid = {});

void for_each_tournament(int n, const std::function<void(const Digraph&)>& fn);
void for_each_semicomplete(int n, const std::function<void(const Digraph&)>& fn);
std::vector<Digraph> enumerate_all_tournaments(int n);
std::vector<Digraph> enumerate_all_semicomplete(int n);

// independent checks of certificate shapes
bool oracle_is_spanning_eulerian(const Digraph& d, const ArcSet& arcs);
bool oracle_is_eulerian_factor(const Digraph& d, const ArcSet& arcs);
bool oracle_strong(const Digraph& d);

}  // namespace eulertrail
