#include "eulertrail/report.hpp"

#include <algorithm>

#include "eulertrail/classify.hpp"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/decomposition.hpp"
#include "eulertrail/factor.hpp"
#include "eulertrail/oracle.hpp"
#include "eulertrail/trails.hpp"

namespace eulertrail {

using nlohmann::json;

namespace {

json arc_json(Arc a) { return json::array({a.tail, a.head}); }

std::string arc_str(Arc a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

json partition_json(const ObstructionPartition& p) { return {{"r1", p.r1}, {"r2", p.r2}, {"y", p.y}}; }

struct ArcVerdict {
  json body;
  bool verified = true;
  bool good = false;
  bool unavoidable = false;
};

ArcVerdict classify_one(const Digraph& d, Arc a) {
  ArcVerdict v;
  json& j = v.body;
  j["arc"] = arc_json(a);

  auto c = classify_containment(d, a);
  v.good = c.good();
  j["containment"] = containment_name(c.tag);
  if (c.good()) {
    if (c.witness && is_spanning_eulerian(d, *c.witness) && arcset_contains(*c.witness, a)) {
      j["witness"] = arcs_json(*c.witness);
    } else {
      j["witness"] = nullptr;
      v.verified = false;
    }
    j["construction"] = c.construction;
    if (c.oracle_fallback) j["oracle_fallback"] = true;
  } else if (c.tag == ContainmentTag::regular_bad) {
    j["blocking_set"] = c.blocking_set;
  }

  auto u = classify_unavoidable(d, a);
  v.unavoidable = u.unavoidable();
  j["unavoidable"] = unavoid_name(u.tag);
  if (!u.labels.empty()) {
    json labels = json::array();
    for (auto t : u.labels) labels.push_back(unavoid_name(t));
    j["labels"] = labels;
  }
  if (!u.unavoidable()) {
    if (u.witness && !arcset_contains(*u.witness, a) && is_spanning_eulerian(d, *u.witness)) {
      j["avoiding_witness"] = arcs_json(*u.witness);
    } else {
      j["avoiding_witness"] = nullptr;
      v.verified = false;
    }
  } else if (u.cut) {
    if (validate_cut(d, *u.cut) && u.cut->crossing == ArcSet{a}) j["cut"] = cut_json(*u.cut);
    else v.verified = false;
  } else if (u.partition) {
    if (validate_obstruction(d, *u.partition, {a})) j["partition"] = partition_json(*u.partition);
    else v.verified = false;
  } else {
    v.verified = false;
  }
  if (!v.verified) j["verified"] = false;
  return v;
}

}  // namespace

json arcs_json(const ArcSet& s) {
  json out = json::array();
  for (Arc a : s) out.push_back(arc_json(a));
  return out;
}

json cut_json(const CutCertificate& c) {
  return {{"side_s", c.side_s}, {"side_t", c.side_t}, {"crossing", arcs_json(c.crossing)}};
}

ArcSet parse_arc_list(const std::string& text, const Digraph& d) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed arc list: ") + e.what(), e.byte);
  }
  if (j.is_object() && j.contains("arcs")) j = j["arcs"];
  if (!j.is_array()) throw ParseError("arc list must be an array of [u,v] pairs", 0);
  std::vector<Arc> arcs;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw ParseError("arc list entry #" + std::to_string(arcs.size()) + " is not a pair of integers", 0);
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  ArcSet f = make_arcset(arcs);
  if (f.size() != arcs.size()) throw InvalidParameter("arc list has duplicates");
  require_subset(d, f, "arc list");
  return f;
}

Report analyze_report(const Digraph& d) {
  Report r;
  json& j = r.body;
  const bool strong = is_strong(d);
  j["n"] = d.n();
  j["m"] = d.arc_count();
  j["semicomplete"] = is_semicomplete(d);
  j["strong"] = strong;
  auto lam = arc_connectivity(d);
  j["lambda"] = lam.lambda;
  if (lam.cut) j["min_cut"] = cut_json(*lam.cut);
  if (!strong) {
    j["components"] = strong_components(d);
    r.summary = "n=" + std::to_string(d.n()) + " not strong";
    return r;
  }
  ArcSet cuts = cut_arcs(d);
  j["cut_arcs"] = arcs_json(cuts);
  r.highlight = cuts;
  r.summary = "n=" + std::to_string(d.n()) + " m=" + std::to_string(d.arc_count()) +
              " lambda=" + std::to_string(lam.lambda) + " cut-arcs=" + std::to_string(cuts.size());
  if (d.n() >= 4 && is_semicomplete(d)) {
    Decomposition dec = nice_decomposition(d);
    BackwardOrdering ord = natural_backward_ordering(d, dec);
    j["decomposition"] = dec.sets;
    json back = json::array();
    for (Arc a : ord.arcs) back.push_back(arc_json(a));
    j["backward_ordering"] = back;
    j["ignored_sets"] = ignored_sets(dec, ord);
    r.summary += " parts=" + std::to_string(dec.p());
  }
  return r;
}

Report classify_report(const Digraph& d, std::optional<Arc> arc) {
  Report r;
  if (arc) {
    ArcVerdict v = classify_one(d, *arc);
    r.body = v.body;
    if (!v.verified) r.exit_code = kExitUnknown;
    if (v.body.contains("witness") && !v.body["witness"].is_null()) {
      for (const auto& a : v.body["witness"]) r.highlight.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    r.summary = arc_str(*arc) + ": " + v.body["containment"].get<std::string>() + ", " +
                v.body["unavoidable"].get<std::string>();
    return r;
  }
  json per = json::array();
  ArcSet bad, unavoidable;
  long long unverified = 0;
  for (Arc a : d.arcs()) {
    ArcVerdict v = classify_one(d, a);
    if (!v.good) bad.push_back(a);
    if (v.unavoidable) unavoidable.push_back(a);
    if (!v.verified) ++unverified;
    per.push_back(std::move(v.body));
  }
  r.body["arcs"] = per;
  r.body["bad"] = arcs_json(bad);
  r.body["unavoidable"] = arcs_json(unavoidable);
  if (unverified) r.exit_code = kExitUnknown;
  r.highlight = bad;
  r.summary = std::to_string(d.arc_count()) + " arcs: " + std::to_string(bad.size()) + " bad, " +
              std::to_string(unavoidable.size()) + " unavoidable";
  if (unverified) r.summary += ", " + std::to_string(unverified) + " unverified";
  return r;
}

Report trail_report(const Digraph& d, int x, int y) {
  if (x < 0 || y < 0 || x >= d.n() || y >= d.n()) throw InvalidParameter("vertex out of range");
  if (x == y) throw InvalidParameter("trail needs distinct endpoints");
  if (!is_semicomplete(d)) throw PreconditionError("trail: digraph is not semicomplete");
  Report r;
  json& j = r.body;
  j["from"] = x;
  j["to"] = y;
  auto pc = arc_disjoint_paths(d, x, y, 2);
  if (pc.found() && is_strong(d)) {
    Trail t = spanning_trail(d, x, y);
    if (!validate_trail(d, t, x, y, true)) {
      j["status"] = "unknown";
      r.exit_code = kExitUnknown;
      r.summary = "trail failed validation";
      return r;
    }
    j["status"] = "trail";
    j["trail"] = t.vertices;
    r.highlight = trail_arcs(t);
    r.summary = "spanning trail " + std::to_string(x) + " -> " + std::to_string(y) + " with " +
                std::to_string(t.vertices.size() - 1) + " arcs";
    return r;
  }
  // fewer than two arc-disjoint paths (or not strong): a trail may still exist
  if (pc.cut && validate_cut(d, *pc.cut)) j["cut"] = cut_json(*pc.cut);
  try {
    bool exists = oracle_spanning_trail_exists(d, x, y);
    j["oracle"] = exists;
    if (!exists) {
      j["status"] = "none";
      r.exit_code = kExitObstruction;
      r.summary = "no spanning trail " + std::to_string(x) + " -> " + std::to_string(y);
      return r;
    }
  } catch (const SizeError&) {
    j["oracle"] = nullptr;
  }
  j["status"] = "unknown";
  r.exit_code = kExitUnknown;
  r.summary = "fewer than two arc-disjoint paths; no trail constructed";
  return r;
}

Report avoid_report(const Digraph& d, const ArcSet& f) {
  require_subset(d, f, "avoid");
  Report r;
  AvoidResult a = spanning_eulerian_avoiding(d, f);
  json& j = r.body;
  j["avoid"] = arcs_json(f);
  j["route"] = a.route;
  j["guaranteed"] = a.guaranteed;
  if (!validate_avoiding(d, f, a)) {
    j["status"] = "unknown";
    j["verified"] = false;
    r.exit_code = kExitUnknown;
    r.summary = "certificate failed validation (route " + a.route + ")";
    return r;
  }
  j["status"] = avoid_status_name(a.status);
  switch (a.status) {
    case AvoidStatus::found:
      j["arcs"] = arcs_json(a.arcs);
      r.highlight = a.arcs;
      r.summary = "found " + std::to_string(a.arcs.size()) + " arcs via " + a.route;
      break;
    case AvoidStatus::obstruction:
      if (a.cut) j["cut"] = cut_json(*a.cut);
      if (a.partition) j["partition"] = partition_json(*a.partition);
      r.exit_code = kExitObstruction;
      r.summary = "impossible (" + a.route + ")";
      break;
    case AvoidStatus::unknown:
      r.exit_code = kExitUnknown;
      r.summary = "unknown (" + a.route + ")";
      break;
  }
  return r;
}

Report conjecture_report(const ConjectureOptions& opt) {
  ConjectureReport rep = conjecture_search(opt);
  Report r;
  json& j = r.body;
  j["k"] = opt.k;
  j["n"] = opt.n;
  j["trials"] = rep.trials;
  j["seed"] = opt.seed;
  j["outcomes"] = rep.outcomes;
  j["routes"] = rep.routes;
  auto list = [](const std::vector<ConjectureInstance>& v) {
    json out = json::array();
    for (const auto& c : v)
      out.push_back({{"index", c.index},
                     {"digraph", json::parse(serialize_json(c.d))},
                     {"avoid", arcs_json(c.f)}});
    return out;
  };
  j["candidates"] = list(rep.candidates);
  j["invalid"] = list(rep.invalid);
  if (!rep.candidates.empty()) r.exit_code = kExitObstruction;
  else if (!rep.invalid.empty() || rep.count(ConjectureOutcome::unknown) > 0) r.exit_code = kExitUnknown;
  r.summary = std::to_string(rep.trials) + " trials (k=" + std::to_string(opt.k) + ", n<=" +
              std::to_string(opt.n) + "): " + std::to_string(rep.candidates.size()) + " candidates, " +
              std::to_string(rep.count(ConjectureOutcome::unknown)) + " unknown, " +
              std::to_string(rep.invalid.size()) + " invalid";
  return r;
}

}  // namespace eulertrail
