#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulertrail/connectivity.hpp"
#include "eulertrail/core.hpp"

namespace eulertrail {

struct EulerianFactor {
  ArcSet arcs;
  std::vector<std::vector<int>> components;  // weak components, each sorted
};

// Y independent, nothing R2->Y, nothing Y->R1, fewer than |Y| arcs R2->R1
struct ObstructionPartition {
  std::vector<int> r1, r2, y;
};

struct FactorResult {
  std::optional<EulerianFactor> factor;
  std::optional<ObstructionPartition> obstruction;
};

// weak components of the arc set, sorted by smallest vertex
std::vector<std::vector<int>> arc_components(int n, const ArcSet& arcs);
EulerianFactor make_factor(int n, ArcSet arcs);

FactorResult eulerian_factor(const Digraph& d, const ArcSet& avoid = {});
bool validate_factor(const Digraph& d, const EulerianFactor& f, const ArcSet& avoid = {});
// checked in d minus avoid
bool validate_obstruction(const Digraph& d, const ObstructionPartition& p, const ArcSet& avoid = {});
long long arcs_between(const Digraph& d, const std::vector<int>& from, const std::vector<int>& to);

// lambda(d) >= k + 1
bool factor_exists_guarantee(const Digraph& d, int k);

// One licensed merge of two components (or, for 'e', the forced structure).
struct MergePattern {
  char rule = 'a';  // 'a'..'e'
  std::vector<int> vertices;
  ArcSet remove, add;  // empty for a structural 'e' report
};
struct MergeReport {
  std::vector<MergePattern> patterns;
  bool mergeable() const;
};
// h1, h2: arc sets of two vertex-disjoint eulerian subdigraphs of d
MergeReport check_merge_obstructions(const Digraph& d, const ArcSet& h1, const ArcSet& h2);

// Merge rule names in the order they are tried.
enum class MergeRule { cycle, two_cycle, path_b, cross_c, three_cycle, exchange };
const char* merge_rule_name(MergeRule r);

struct MergeTrace {
  std::vector<MergeRule> applied;
};
EulerianFactor merge_all(const Digraph& d, const EulerianFactor& factor, const ArcSet& avoid = {},
                         MergeTrace* trace = nullptr);

bool is_star_set(const Digraph& d, const ArcSet& f);
// non-adjacent pairs of d minus f form disjoint cliques (the independence classes)
bool is_multipartite_remainder(const Digraph& d, const ArcSet& f);
// arcs of d with both ends in one weak component of f
ArcSet multipartite_reduction_arcs(const Digraph& d, const ArcSet& f);
// factor + merge in d minus those arcs (a semicomplete multipartite digraph); nullopt when merging stalls
std::optional<ArcSet> avoid_by_reduction(const Digraph& d, const ArcSet& f);

enum class AvoidStatus { found, obstruction, unknown };
const char* avoid_status_name(AvoidStatus s);

struct AvoidResult {
  AvoidStatus status = AvoidStatus::unknown;
  ArcSet arcs;                                // found
  std::optional<CutCertificate> cut;          // obstruction: d minus f not strong
  std::optional<ObstructionPartition> partition;  // obstruction: no eulerian factor
  std::string route;                          // which step decided
  bool guaranteed = false;                    // a proven regime covers (d, f)
};

AvoidResult spanning_eulerian_avoiding(const Digraph& d, const ArcSet& f);
bool validate_avoiding(const Digraph& d, const ArcSet& f, const AvoidResult& r);

}  // namespace eulertrail
