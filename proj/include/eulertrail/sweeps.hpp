#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eulertrail/core.hpp"

namespace eulertrail {

// Batch checks of the constructive modules against the oracle. Each has an
// OpenMP driver (jobs <= 0: OpenMP default thread count) and a plain serial
// loop; results do not depend on the thread count.

struct SweepTally {
  long long instances = 0;
  long long checks = 0;     // arcs or vertex pairs looked at
  long long positives = 0;  // good arcs / avoidable arcs / pairs with a trail
  long long failures = 0;
  long long fallbacks = 0;  // containment only: oracle stood in for the construction
  std::vector<std::string> notes;  // first few failures, ordered by instance
  void merge(const SweepTally& o);
};

// strong members of an exhaustive family
std::vector<Digraph> strong_tournaments(int n);
std::vector<Digraph> strong_semicomplete(int n);

// classify_containment vs the oracle, witnesses re-checked
SweepTally containment_sweep(const std::vector<Digraph>& ds, int jobs = 0);
SweepTally containment_sweep_serial(const std::vector<Digraph>& ds);
// classify_unavoidable vs the oracle; one label per compulsory arc, certificates re-checked
SweepTally unavoidable_sweep(const std::vector<Digraph>& ds, int jobs = 0);
SweepTally unavoidable_sweep_serial(const std::vector<Digraph>& ds);
// every ordered pair joined by 2 arc-disjoint paths gets a valid spanning trail
// avoiding yx with out-degree <= 2; other pairs get a valid cut
SweepTally trail_sweep(const std::vector<Digraph>& ds, int jobs = 0);
SweepTally trail_sweep_serial(const std::vector<Digraph>& ds);

struct ConjectureOptions {
  int k = 4;
  int n = 8;  // orders drawn from k+2..n
  long long trials = 1000;
  std::uint64_t seed = 1;
  int jobs = 0;
};

struct ConjectureInstance {
  long long index = 0;
  Digraph d;  // (k+1)-arc-strong semicomplete
  ArcSet f;   // k arcs
};

// deterministic in (seed, index)
ConjectureInstance conjecture_instance(int k, int n_max, std::uint64_t seed, long long index);

enum class ConjectureOutcome { certificate, oracle_certificate, candidate, unknown, invalid };
const char* conjecture_outcome_name(ConjectureOutcome o);

struct ConjectureReport {
  long long trials = 0;
  std::map<std::string, long long> outcomes;  // by conjecture_outcome_name
  std::map<std::string, long long> routes;    // pipeline route counts
  std::vector<ConjectureInstance> candidates;  // ordered by index
  std::vector<ConjectureInstance> invalid;     // certificate failed re-validation
  long long count(ConjectureOutcome o) const;
  void merge(const ConjectureReport& o);
};

ConjectureOutcome conjecture_trial(const ConjectureInstance& inst, std::string* route = nullptr);
ConjectureReport conjecture_search(const ConjectureOptions& opt);
ConjectureReport conjecture_search_serial(const ConjectureOptions& opt);

}  // namespace eulertrail
