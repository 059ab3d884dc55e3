#pragma once

#include <string>
#include <vector>

#include "eulertrail/core.hpp"

namespace eulertrail {

struct Decomposition {
  std::vector<std::vector<int>> sets;  // S_1..S_p stored 0-based
  std::vector<int> ind;                // 1-based set index per vertex

  int p() const { return static_cast<int>(sets.size()); }
  const std::vector<int>& set(int i) const { return sets[i - 1]; }  // 1-based
  static Decomposition from_sets(int n, std::vector<std::vector<int>> sets);
};

enum class ArcTag { forward, backward, flat };

// s_1t_1, ..., s_rt_r by decreasing tail index
struct BackwardOrdering {
  std::vector<Arc> arcs;
  int r() const { return static_cast<int>(arcs.size()); }
  int s(int j) const { return arcs[j - 1].tail; }  // 1-based
  int t(int j) const { return arcs[j - 1].head; }
};

ArcTag arc_tag(const Decomposition& dec, Arc a);
const char* tag_name(ArcTag t);

Decomposition one_decomposition(const Digraph& d);
Decomposition nice_decomposition(const Digraph& d);
BackwardOrdering natural_backward_ordering(const Digraph& d, const Decomposition& dec);
// 1-based indices, sorted
std::vector<int> ignored_sets(const Decomposition& dec, const BackwardOrdering& ord);
// names of violated properties: "strong", "1-decomposition", "(i)", "(ii)", "(iii)"
std::vector<std::string> verify_structure(const Digraph& d, const Decomposition& dec);
// properties of the natural ordering: "ordering(i)", "ordering(ii)", "ordering(iii)"
std::vector<std::string> verify_ordering(const Digraph& d, const Decomposition& dec,
                                         const BackwardOrdering& ord);
bool is_nice(const Digraph& d, const Decomposition& dec);

Decomposition reverse_decomposition(const Decomposition& dec);

// Every nice decomposition: the parts are forced (strong components of D minus
// its cut-arcs), only their order varies. Throws SizeError above max_parts.
std::vector<Decomposition> all_nice_decompositions(const Digraph& d, int max_parts = 8);

}  // namespace eulertrail
