#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulertrail/connectivity.hpp"
#include "eulertrail/core.hpp"
#include "eulertrail/decomposition.hpp"
#include "eulertrail/factor.hpp"

namespace eulertrail {

enum class ContainmentTag { good, regular_bad, left_bad, right_bad, small_case };
const char* containment_name(ContainmentTag t);

struct ContainmentClass {
  ContainmentTag tag = ContainmentTag::good;
  std::optional<ArcSet> witness;  // good: spanning eulerian subdigraph holding the arc
  int blocking_set = 0;           // regular-bad: an ignored index strictly between the ends
  std::string construction;       // how the witness was built
  bool oracle_fallback = false;   // construction failed and the exhaustive search stood in
  bool good() const { return tag == ContainmentTag::good; }
};

// Verdict only. dec must be a nice decomposition of d when given (n >= 4).
ContainmentTag containment_verdict(const Digraph& d, Arc a, const Decomposition* dec = nullptr);
ContainmentClass classify_containment(const Digraph& d, Arc a, const Decomposition* dec = nullptr);

enum class UnavoidTag { avoidable, cut_arc, regular_compulsory, left_compulsory, right_compulsory, exceptional };
const char* unavoid_name(UnavoidTag t);

struct UnavoidClass {
  UnavoidTag tag = UnavoidTag::avoidable;
  // every compulsory/exceptional definition the arc meets (unavoidable non-cut arcs)
  std::vector<UnavoidTag> labels;
  std::optional<ArcSet> witness;                  // avoidable
  std::optional<ObstructionPartition> partition;  // unavoidable, not a cut-arc: Y = {u, v}
  std::optional<CutCertificate> cut;              // cut-arc
  bool unavoidable() const { return tag != UnavoidTag::avoidable; }
};

// with_witness = false skips building the avoiding subdigraph
UnavoidClass classify_unavoidable(const Digraph& d, Arc a, bool with_witness = true);
ArcSet unavoidable_arcs(const Digraph& d);

// spanning, connected, balanced
bool is_spanning_eulerian(const Digraph& d, const ArcSet& arcs);

}  // namespace eulertrail
