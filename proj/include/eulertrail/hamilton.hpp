#pragma once

#include <optional>
#include <vector>

#include "eulertrail/core.hpp"

namespace eulertrail {

using Path = std::vector<int>;
// distinct vertices c_0..c_{k-1}; the closing arc c_{k-1}c_0 is implicit.
// A single vertex is the trivial cycle.
using Cycle = std::vector<int>;

// initial strong component of a semicomplete digraph
std::vector<int> out_generators(const Digraph& d);
// terminal strong component
std::vector<int> in_generators(const Digraph& d);

Path hamiltonian_path(const Digraph& d);
// with y: d non-strong, x an out-generator, y an in-generator.
// without y: x an out-generator.
Path hamiltonian_path_between(const Digraph& d, int x, std::optional<int> y = std::nullopt);
Cycle hamiltonian_cycle(const Digraph& d);
// cycle through every vertex outside V(F) and through z, using no arc of F
Cycle cycle_covering_complement(const Digraph& d, const std::vector<int>& f_vertices,
                                const ArcSet& f_arcs, int z);

ArcSet cycle_arcs(const Cycle& c);
ArcSet path_arcs(const Path& p);
Cycle rotate_to(const Cycle& c, int v);

}  // namespace eulertrail
