#include "eulertrail/sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

#include "eulertrail/classify.hpp"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/factor.hpp"
#include "eulertrail/oracle.hpp"
#include "eulertrail/trails.hpp"

namespace eulertrail {

namespace {

constexpr std::size_t kNotes = 8;

std::string arc_str(Arc a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

void note(SweepTally& t, long long idx, const std::string& what) {
  ++t.failures;
  if (t.notes.size() < kNotes) t.notes.push_back("#" + std::to_string(idx) + ": " + what);
}

int threads(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

using Kernel = SweepTally (*)(const Digraph&, long long);

SweepTally guarded(Kernel k, const Digraph& d, long long idx) {
  try {
    return k(d, idx);
  } catch (const std::exception& e) {
    SweepTally t;
    t.instances = 1;
    note(t, idx, std::string("threw: ") + e.what());
    return t;
  }
}

SweepTally run_parallel(Kernel k, const std::vector<Digraph>& ds, int jobs) {
  const long long n = static_cast<long long>(ds.size());
  std::vector<SweepTally> per(ds.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads(jobs))
  for (long long i = 0; i < n; ++i) per[i] = guarded(k, ds[i], i);
  SweepTally out;
  for (const auto& t : per) out.merge(t);
  return out;
}

SweepTally run_serial(Kernel k, const std::vector<Digraph>& ds) {
  SweepTally out;
  for (std::size_t i = 0; i < ds.size(); ++i) out.merge(guarded(k, ds[i], static_cast<long long>(i)));
  return out;
}

SweepTally containment_kernel(const Digraph& d, long long idx) {
  SweepTally t;
  t.instances = 1;
  for (Arc a : d.arcs()) {
    ++t.checks;
    auto c = classify_containment(d, a);
    bool truth = oracle_has_spanning_eulerian(d, {a}, {});
    if (c.good()) ++t.positives;
    if (c.oracle_fallback) ++t.fallbacks;
    if (c.good() != truth) {
      note(t, idx, "arc " + arc_str(a) + " classified " + containment_name(c.tag));
    } else if (c.good() && !(c.witness && oracle_is_spanning_eulerian(d, *c.witness) &&
                             arcset_contains(*c.witness, a))) {
      note(t, idx, "arc " + arc_str(a) + " witness invalid");
    }
  }
  return t;
}

SweepTally unavoidable_kernel(const Digraph& d, long long idx) {
  SweepTally t;
  t.instances = 1;
  for (Arc a : d.arcs()) {
    ++t.checks;
    auto u = classify_unavoidable(d, a);
    bool truth = !oracle_has_spanning_eulerian(d, {}, {a});
    if (!u.unavoidable()) ++t.positives;
    const std::string at = "arc " + arc_str(a) + " ";
    if (u.unavoidable() != truth) {
      note(t, idx, at + "classified " + unavoid_name(u.tag));
      continue;
    }
    if (!u.unavoidable()) {
      if (!u.witness || arcset_contains(*u.witness, a) || !oracle_is_spanning_eulerian(d, *u.witness))
        note(t, idx, at + "avoiding witness invalid");
    } else if (u.tag == UnavoidTag::cut_arc) {
      if (!u.cut || !validate_cut(d, *u.cut) || u.cut->crossing != ArcSet{a})
        note(t, idx, at + "cut certificate invalid");
    } else {
      if (d.n() >= 4 && u.labels.size() != 1)
        note(t, idx, at + std::to_string(u.labels.size()) + " labels");
      else if (!u.partition || !validate_obstruction(d, *u.partition, {a}))
        note(t, idx, at + "partition invalid");
    }
  }
  return t;
}

bool trail_ok(const Digraph& d, const Trail& tr, int x, int y) {
  if (!validate_trail(d, tr, x, y, true)) return false;
  ArcSet used = trail_arcs(tr);
  if (arcset_contains(used, {y, x})) return false;
  std::vector<int> out(d.n(), 0);
  for (Arc a : used)
    if (++out[a.tail] > 2) return false;
  return true;
}

SweepTally trail_kernel(const Digraph& d, long long idx) {
  SweepTally t;
  t.instances = 1;
  for (int x = 0; x < d.n(); ++x)
    for (int y = 0; y < d.n(); ++y) {
      if (x == y) continue;
      ++t.checks;
      const std::string at = "pair " + std::to_string(x) + "," + std::to_string(y) + " ";
      bool two = arc_disjoint_paths(d, x, y, 2).found();
      try {
        Trail tr = spanning_trail(d, x, y);
        if (!two) note(t, idx, at + "trail without two disjoint paths");
        else if (!trail_ok(d, tr, x, y)) note(t, idx, at + "trail invalid");
        else ++t.positives;
      } catch (const TrailCertificateError& e) {
        if (two) note(t, idx, at + "no trail");
        else if (!validate_cut(d, e.cut)) note(t, idx, at + "cut invalid");
      }
    }
  return t;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void record(ConjectureReport& rep, const ConjectureInstance& inst) {
  std::string route;
  ConjectureOutcome o;
  try {
    o = conjecture_trial(inst, &route);
  } catch (const std::exception&) {
    o = ConjectureOutcome::invalid;
    route = "threw";
  }
  ++rep.trials;
  ++rep.outcomes[conjecture_outcome_name(o)];
  ++rep.routes[route];
  if (o == ConjectureOutcome::candidate) rep.candidates.push_back(inst);
  if (o == ConjectureOutcome::invalid) rep.invalid.push_back(inst);
}

void sort_by_index(std::vector<ConjectureInstance>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
}

void check_options(const ConjectureOptions& opt) {
  if (opt.k < 1) throw InvalidParameter("conjecture search: k must be at least 1");
  if (opt.n < opt.k + 2)
    throw InvalidParameter("conjecture search: n must be at least k + 2 for a (k+1)-arc-strong digraph");
  if (opt.trials < 0) throw InvalidParameter("conjecture search: negative trial count");
}

}  // namespace

void SweepTally::merge(const SweepTally& o) {
  instances += o.instances;
  checks += o.checks;
  positives += o.positives;
  failures += o.failures;
  fallbacks += o.fallbacks;
  for (const auto& s : o.notes)
    if (notes.size() < kNotes) notes.push_back(s);
}

std::vector<Digraph> strong_tournaments(int n) {
  std::vector<Digraph> out;
  for_each_tournament(n, [&](const Digraph& d) {
    if (is_strong(d)) out.push_back(d);
  });
  return out;
}

std::vector<Digraph> strong_semicomplete(int n) {
  std::vector<Digraph> out;
  for_each_semicomplete(n, [&](const Digraph& d) {
    if (is_strong(d)) out.push_back(d);
  });
  return out;
}

SweepTally containment_sweep(const std::vector<Digraph>& ds, int jobs) {
  return run_parallel(containment_kernel, ds, jobs);
}
SweepTally containment_sweep_serial(const std::vector<Digraph>& ds) {
  return run_serial(containment_kernel, ds);
}
SweepTally unavoidable_sweep(const std::vector<Digraph>& ds, int jobs) {
  return run_parallel(unavoidable_kernel, ds, jobs);
}
SweepTally unavoidable_sweep_serial(const std::vector<Digraph>& ds) {
  return run_serial(unavoidable_kernel, ds);
}
SweepTally trail_sweep(const std::vector<Digraph>& ds, int jobs) { return run_parallel(trail_kernel, ds, jobs); }
SweepTally trail_sweep_serial(const std::vector<Digraph>& ds) { return run_serial(trail_kernel, ds); }

ConjectureInstance conjecture_instance(int k, int n_max, std::uint64_t seed, long long index) {
  std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(index))));
  ConjectureInstance inst;
  inst.index = index;
  const int n = std::uniform_int_distribution<int>(k + 2, n_max)(rng);
  // denser as attempts fail; the complete digraph on n >= k+2 vertices always qualifies
  double p2 = 0.5;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 8 == 0) p2 = std::min(1.0, p2 + 0.1);
    Digraph d = gen_random_semicomplete(n, p2, rng());
    if (is_k_arc_strong(d, k + 1)) {
      inst.d = std::move(d);
      break;
    }
  }
  ArcSet arcs = inst.d.arcs();
  std::shuffle(arcs.begin(), arcs.end(), rng);
  arcs.resize(static_cast<std::size_t>(k));
  inst.f = make_arcset(arcs);
  return inst;
}

const char* conjecture_outcome_name(ConjectureOutcome o) {
  switch (o) {
    case ConjectureOutcome::certificate: return "certificate";
    case ConjectureOutcome::oracle_certificate: return "oracle-certificate";
    case ConjectureOutcome::candidate: return "candidate";
    case ConjectureOutcome::unknown: return "unknown";
    case ConjectureOutcome::invalid: return "invalid";
  }
  return "?";
}

long long ConjectureReport::count(ConjectureOutcome o) const {
  auto it = outcomes.find(conjecture_outcome_name(o));
  return it == outcomes.end() ? 0 : it->second;
}

void ConjectureReport::merge(const ConjectureReport& o) {
  trials += o.trials;
  for (const auto& [k, v] : o.outcomes) outcomes[k] += v;
  for (const auto& [k, v] : o.routes) routes[k] += v;
  candidates.insert(candidates.end(), o.candidates.begin(), o.candidates.end());
  invalid.insert(invalid.end(), o.invalid.begin(), o.invalid.end());
  sort_by_index(candidates);
  sort_by_index(invalid);
}

ConjectureOutcome conjecture_trial(const ConjectureInstance& inst, std::string* route) {
  AvoidResult r = spanning_eulerian_avoiding(inst.d, inst.f);
  if (route) *route = r.route;
  if (!validate_avoiding(inst.d, inst.f, r)) return ConjectureOutcome::invalid;
  if (r.status == AvoidStatus::found)
    return r.route == "oracle" ? ConjectureOutcome::oracle_certificate : ConjectureOutcome::certificate;
  // the pipeline gave up or claims impossibility: ask the oracle on its own
  bool exists;
  try {
    exists = oracle_has_spanning_eulerian(inst.d, {}, inst.f);
  } catch (const SizeError&) {
    return r.status == AvoidStatus::obstruction ? ConjectureOutcome::candidate : ConjectureOutcome::unknown;
  }
  if (!exists) return ConjectureOutcome::candidate;
  return r.status == AvoidStatus::obstruction ? ConjectureOutcome::invalid : ConjectureOutcome::oracle_certificate;
}

ConjectureReport conjecture_search(const ConjectureOptions& opt) {
  check_options(opt);
  ConjectureReport total;
#pragma omp parallel num_threads(threads(opt.jobs))
  {
    ConjectureReport mine;
#pragma omp for schedule(dynamic, 4)
    for (long long i = 0; i < opt.trials; ++i) record(mine, conjecture_instance(opt.k, opt.n, opt.seed, i));
#pragma omp critical
    total.merge(mine);
  }
  return total;
}

ConjectureReport conjecture_search_serial(const ConjectureOptions& opt) {
  check_options(opt);
  ConjectureReport rep;
  for (long long i = 0; i < opt.trials; ++i) record(rep, conjecture_instance(opt.k, opt.n, opt.seed, i));
  return rep;
}

}  // namespace eulertrail
