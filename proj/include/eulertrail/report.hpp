#pragma once

#include <optional>
#include <string>

#include "eulertrail/connectivity.hpp"
#include "eulertrail/core.hpp"
#include "eulertrail/sweeps.hpp"
#include "json.hpp"

namespace eulertrail {

// process exit codes of the command-line tool
enum ExitCode : int { kExitCertificate = 0, kExitInputError = 1, kExitObstruction = 2, kExitUnknown = 3 };

// Each command's result. Certificates in body have been re-validated; one that
// fails is dropped and the exit code becomes kExitUnknown.
struct Report {
  nlohmann::json body;
  int exit_code = kExitCertificate;
  std::string summary;  // one human-readable line
  ArcSet highlight;     // arcs to emphasise in a DOT rendering
};

nlohmann::json arcs_json(const ArcSet& s);
nlohmann::json cut_json(const CutCertificate& c);

// [[u,v],...] or {"arcs": [[u,v],...]}; every arc must be in d
ArcSet parse_arc_list(const std::string& text, const Digraph& d);

Report analyze_report(const Digraph& d);
// arc == nullopt: every arc
Report classify_report(const Digraph& d, std::optional<Arc> arc);
Report trail_report(const Digraph& d, int x, int y);
Report avoid_report(const Digraph& d, const ArcSet& f);
Report conjecture_report(const ConjectureOptions& opt);

}  // namespace eulertrail
