#ifndef SVB_REPORT_HPP
#define SVB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "svb/solver.hpp"

namespace svb {

/// Machine-readable solver report, schemaVersion 1:
/// { "schemaVersion":1, "algebra":..., "window":{"N":..,"B":..},
///   "runs":[ { "gamma":0|1, "shift2":.., "unknowns":.., "constraints":..,
///              "nullspaceDim":.., "interiorDim":.., "isInner":..,
///              "innerCoordinates":[["numer","denom"],..], "basis":[..],
///              "degenerate":.. } ] }
nlohmann::json report_json(const std::string& algebra, const Window& window,
                           const std::vector<SolverRun>& runs,
                           const AlgebraSpec& alg);

std::string report_text(const std::string& algebra, const Window& window,
                        const std::vector<SolverRun>& runs);

}  // namespace svb

#endif
