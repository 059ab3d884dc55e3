// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eulertrail/classify.hpp"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/decomposition.hpp"
#include "eulertrail/factor.hpp"
#include "eulertrail/oracle.hpp"
#include "eulertrail/sweeps.hpp"
#include "eulertrail/trails.hpp"

using namespace eulertrail;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failed = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + "s budget)";
  }
  if (!o.pass) ++failed;
  std::printf("criterion %d: %s - %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string tally_text(const SweepTally& t) {
  std::string s = std::to_string(t.instances) + " digraphs, " + std::to_string(t.checks) + " checks, " +
                  std::to_string(t.failures) + " failures";
  for (const auto& n : t.notes) s += "; " + n;
  return s;
}

std::vector<Digraph> small_family() {
  auto a = strong_semicomplete(4);
  auto b = strong_tournaments(5);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// random semicomplete digraph with lambda >= k, order in [lo, hi]
Digraph strong_sample(std::mt19937_64& rng, int k, int lo, int hi, double p_lo, double p_hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> dens(p_lo, p_hi);
  for (;;) {
    Digraph d = gen_random_semicomplete(order(rng), dens(rng), rng());
    if (is_k_arc_strong(d, k)) return d;
  }
}

ArcSet pick_arcs(std::mt19937_64& rng, const Digraph& d, int k) {
  ArcSet arcs = d.arcs();
  std::shuffle(arcs.begin(), arcs.end(), rng);
  arcs.resize(static_cast<std::size_t>(k));
  return make_arcset(arcs);
}

ArcSet pick_star(std::mt19937_64& rng, const Digraph& d, int k) {
  for (;;) {
    int c = std::uniform_int_distribution<int>(0, d.n() - 1)(rng);
    ArcSet at;
    for (Arc a : d.arcs())
      if (a.tail == c || a.head == c) at.push_back(a);
    std::shuffle(at.begin(), at.end(), rng);
    if (static_cast<int>(at.size()) < k) continue;
    at.resize(static_cast<std::size_t>(k));
    ArcSet f = make_arcset(at);
    if (is_star_set(d, f)) return f;
  }
}

bool avoids_and_spans(const Digraph& d, const ArcSet& f, const ArcSet& h) {
  for (Arc a : f)
    if (arcset_contains(h, a)) return false;
  return oracle_is_spanning_eulerian(d, h);
}

// the three defining conditions written out against d minus avoid
bool obstruction_holds(const Digraph& d, const ArcSet& avoid, const ObstructionPartition& p) {
  std::vector<int> side(d.n(), -1);
  for (int v : p.r1) side[v] = 1;
  for (int v : p.r2) {
    if (side[v] != -1) return false;
    side[v] = 2;
  }
  for (int v : p.y) {
    if (side[v] != -1) return false;
    side[v] = 0;
  }
  if (std::count(side.begin(), side.end(), -1) > 0 || p.y.empty()) return false;
  long long r2_r1 = 0;
  for (Arc a : d.arcs()) {
    if (arcset_contains(avoid, a)) continue;
    int s = side[a.tail], t = side[a.head];
    if (s == 0 && t == 0) return false;  // Y independent
    if (s == 2 && t == 0) return false;  // nothing R2 -> Y
    if (s == 0 && t == 1) return false;  // nothing Y -> R1
    if (s == 2 && t == 1) ++r2_r1;
  }
  return r2_r1 < static_cast<long long>(p.y.size());
}

}  // namespace

int main() {
  const auto family = small_family();

  criterion(1, 120, [&] {
    auto t = containment_sweep(family);
    return Outcome{t.failures == 0 && t.instances == 1087, tally_text(t)};
  });

  criterion(2, 300, [&] {
    auto t = unavoidable_sweep(family);
    return Outcome{t.failures == 0 && t.instances == 1087, tally_text(t)};
  });

  criterion(3, 300, [&] {
    std::vector<Digraph> ds;
    for (int n = 3; n <= 5; ++n) {
      auto s = strong_tournaments(n);
      ds.insert(ds.end(), s.begin(), s.end());
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) ds.push_back(strong_sample(rng, 1, 6, 8, 0.0, 0.5));
    auto t = trail_sweep(ds);
    return Outcome{t.failures == 0, tally_text(t) + ", " + std::to_string(t.positives) + " trails"};
  });

  criterion(4, 300, [&] {
    std::mt19937_64 rng(4);
    long long arcs = 0, pairs = 0, bad = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
      Digraph d = strong_sample(rng, 2, 5, 30, 0.0, 0.5);
      for (Arc a : d.arcs()) {
        ++arcs;
        auto c = classify_containment(d, a);
        if (!c.good() || !c.witness || !arcset_contains(*c.witness, a) || !is_spanning_eulerian(d, *c.witness)) {
          if (!bad++) first = "instance " + std::to_string(i) + " arc without witness";
        }
      }
      for (int x = 0; x < d.n(); ++x)
        for (int y = 0; y < d.n(); ++y) {
          if (x == y) continue;
          ++pairs;
          try {
            if (!validate_trail(d, spanning_trail(d, x, y), x, y, true) && !bad++)
              first = "instance " + std::to_string(i) + " invalid trail";
          } catch (const Error& e) {
            if (!bad++) first = "instance " + std::to_string(i) + ": " + e.what();
          }
        }
    }
    std::string s = "500 digraphs, " + std::to_string(arcs) + " arcs, " + std::to_string(pairs) + " pairs, " +
                    std::to_string(bad) + " failures";
    if (bad) s += "; " + first;
    return Outcome{bad == 0, s};
  });

  criterion(5, 180, [&] {
    std::mt19937_64 rng(5);
    long long done = 0, exist = 0, obstructions = 0, bad = 0, skipped = 0;
    std::string first;
    while (done < 2000) {
      int n = std::uniform_int_distribution<int>(3, 7)(rng);
      double p2 = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
      Digraph d = gen_random_semicomplete(n, p2, rng());
      int k = std::uniform_int_distribution<int>(0, std::min(4, d.arc_count()))(rng);
      ArcSet avoid = pick_arcs(rng, d, k);
      bool truth;
      try {
        truth = oracle_eulerian_factor(d, avoid);
      } catch (const SizeError&) {
        ++skipped;
        continue;
      }
      ++done;
      auto r = eulerian_factor(d, avoid);
      bool ok;
      if (truth) {
        ++exist;
        ok = r.factor && !r.obstruction && validate_factor(d, *r.factor, avoid) &&
             oracle_is_eulerian_factor(d, r.factor->arcs);
        for (Arc a : avoid)
          if (r.factor && arcset_contains(r.factor->arcs, a)) ok = false;
      } else {
        ++obstructions;
        ok = !r.factor && r.obstruction && obstruction_holds(d, avoid, *r.obstruction);
      }
      if (!ok && !bad++) first = "n=" + std::to_string(n) + " |avoid|=" + std::to_string(k);
    }
    std::string s = std::to_string(done) + " instances (" + std::to_string(exist) + " with a factor, " +
                    std::to_string(obstructions) + " obstructed), " + std::to_string(bad) + " mismatches";
    if (skipped) s += ", " + std::to_string(skipped) + " over oracle limits redrawn";
    if (bad) s += "; first " + first;
    return Outcome{bad == 0, s};
  });

  criterion(6, 600, [&] {
    std::mt19937_64 rng(6);
    struct Regime {
      const char* name;
      int lambda, k;
      bool star;
    };
    const Regime regimes[] = {{"l2f1", 2, 1, false}, {"l3f2", 3, 2, false}, {"l4f3", 4, 3, false},
                              {"star4", 5, 4, true}, {"star5", 6, 5, true}};
    long long bad = 0;
    std::string s, first;
    for (const auto& g : regimes) {
      long long local = 0;
      for (int i = 0; i < 500; ++i) {
        Digraph d = strong_sample(rng, g.lambda, g.lambda + 1, 12, 0.3, 1.0);
        ArcSet f = g.star ? pick_star(rng, d, g.k) : pick_arcs(rng, d, g.k);
        AvoidResult r = spanning_eulerian_avoiding(d, f);
        bool ok = r.status == AvoidStatus::found && validate_avoiding(d, f, r) && avoids_and_spans(d, f, r.arcs);
        if (!ok) {
          ++local;
          if (!bad++) first = std::string(g.name) + " #" + std::to_string(i) + " " + avoid_status_name(r.status) +
                              " via " + r.route;
        }
      }
      s += std::string(s.empty() ? "" : ", ") + g.name + " " + std::to_string(500 - local) + "/500";
    }
    if (bad) s += "; first " + first;
    return Outcome{bad == 0, s};
  });

  criterion(7, 0, [&] {
    std::mt19937_64 rng(7);
    long long bad = 0;
    std::string s;
    for (int k : {4, 5}) {
      const int lambda = (k + 1) * (k + 1) / 4 + ((k + 1) * (k + 1) % 4 != 0) + 1;
      long long ok = 0;
      for (int i = 0; i < 100; ++i) {
        Digraph d = strong_sample(rng, lambda, lambda + 1, lambda + 5, 0.7, 1.0);
        ArcSet f = pick_arcs(rng, d, k);
        auto h = avoid_by_reduction(d, f);
        if (h && avoids_and_spans(d, f, *h)) ++ok;
        else ++bad;
      }
      s += std::string(s.empty() ? "" : ", ") + "k=" + std::to_string(k) + " lambda>=" + std::to_string(lambda) +
           " " + std::to_string(ok) + "/100";
    }
    return Outcome{bad == 0, s};
  });

  criterion(8, 60, [&] {
    auto inst = gen_bad_arc_tournament(3, 3, 11, 12);
    auto c = classify_containment(inst.d, inst.xz);
    bool none = !oracle_has_spanning_eulerian(inst.d, {inst.xz}, {});
    std::string s = "n=" + std::to_string(inst.d.n()) + ", xz " + containment_name(c.tag) +
                    ", oracle " + (none ? "finds none" : "finds one");
    return Outcome{inst.d.n() == 9 && !c.good() && none, s};
  });

  criterion(9, 0, [&] {
    Digraph d = gen_d3();
    ArcSet without;
    bool witnesses_ok = true;
    for (Arc a : d.arcs()) {
      auto c = classify_containment(d, a);
      bool truth = oracle_has_spanning_eulerian(d, {a}, {});
      if (c.good() != truth) witnesses_ok = false;
      if (!c.good()) without.push_back(a);
      else if (!c.witness || !oracle_is_spanning_eulerian(d, *c.witness) || !arcset_contains(*c.witness, a))
        witnesses_ok = false;
    }
    // D3 layout: x=0, y=1, z=2, so zy is 2->1
    bool unique = without == ArcSet{{2, 1}};
    std::string s = std::to_string(without.size()) + " arc(s) without a witness";
    for (Arc a : without) s += " " + std::to_string(a.tail) + "->" + std::to_string(a.head);
    return Outcome{unique && witnesses_ok, s};
  });

  criterion(10, 0, [&] {
    long long checked = 0, bad = 0;
    std::string first;
    for (const auto& d : family) {
      auto dec = nice_decomposition(d);
      auto ord = natural_backward_ordering(d, dec);
      auto v = verify_structure(d, dec);
      auto w = verify_ordering(d, dec, ord);
      v.insert(v.end(), w.begin(), w.end());
      ++checked;
      if (!v.empty() && !bad++) first = v.front();
    }
    std::string s = std::to_string(checked) + " decompositions, " + std::to_string(bad) + " with violations";
    if (bad) s += "; first " + first;
    return Outcome{bad == 0, s};
  });

  criterion(11, 1800, [&] {
    ConjectureOptions opt;
    opt.k = 4;
    opt.n = 8;
    opt.trials = 10000;
    opt.seed = 1;
    auto rep = conjecture_search(opt);
    std::string s = std::to_string(rep.trials) + " trials, " + std::to_string(rep.candidates.size()) +
                    " candidates, " + std::to_string(rep.invalid.size()) + " invalid, " +
                    std::to_string(rep.count(ConjectureOutcome::unknown)) + " unknown";
    return Outcome{rep.trials == 10000 && rep.candidates.empty() && rep.invalid.empty(), s};
  });

  return failed == 0 ? 0 : 1;
}
