#include "svb/report.hpp"

#include <sstream>

namespace svb {

using nlohmann::json;

namespace {

json basis_json(const AlgebraSpec& alg, const SolverRun& run) {
  json out = json::array();
  if (run.commuting) {
    LinearUnknownIndex index(alg, run.window, run.gamma, run.shift);
    for (const SparseVector& v : run.interior_basis) {
      LinearMapCoeffs f = linear_map_from_vector(alg, index, v);
      json entries = json::array();
      for (const auto& [in, val] : f.coeffs()) {
        json terms = json::array();
        for (const auto& [b, c] : val.terms())
          terms.push_back({b.family, b.degree.doubled, c.num().get_str(),
                           c.den().get_str()});
        entries.push_back(
            {{"i", {in.family, in.degree.doubled}}, {"out", terms}});
      }
      out.push_back({{"sector", int(run.gamma)},
                     {"shift2", run.shift.doubled},
                     {"entries", entries}});
    }
  } else {
    UnknownIndex index(alg, run.window, run.gamma, run.shift);
    for (const SparseVector& v : run.interior_basis)
      out.push_back(serialize_bimap_table(map_from_vector(alg, index, v)));
  }
  return out;
}

}  // namespace

json report_json(const std::string& algebra, const Window& window,
                 const std::vector<SolverRun>& runs, const AlgebraSpec& alg) {
  json doc;
  doc["schemaVersion"] = 1;
  doc["algebra"] = algebra;
  doc["window"] = {{"N", window.n}, {"B", window.b}};
  doc["runs"] = json::array();
  for (const SolverRun& r : runs) {
    json coords = json::array();
    for (const Scalar& c : r.inner_coordinates)
      coords.push_back({c.num().get_str(), c.den().get_str()});
    doc["runs"].push_back({{"gamma", int(r.gamma)},
                           {"shift2", r.shift.doubled},
                           {"unknowns", r.unknowns},
                           {"constraints", r.constraints},
                           {"nullspaceDim", r.nullspace_dim},
                           {"interiorDim", r.interior_dim},
                           {"isInner", r.is_inner},
                           {"innerCoordinates", coords},
                           {"basis", basis_json(alg, r)},
                           {"degenerate", r.degenerate}});
  }
  return doc;
}

std::string report_text(const std::string& algebra, const Window& window,
                        const std::vector<SolverRun>& runs) {
  std::ostringstream os;
  os << "algebra " << algebra << "  window N=" << window.n
     << " B=" << window.b << "\n";
  for (const SolverRun& r : runs) {
    os << "  gamma=" << int(r.gamma) << " shift2=" << r.shift.doubled
       << "  unknowns=" << r.unknowns << " constraints=" << r.constraints
       << " nullspaceDim=" << r.nullspace_dim
       << " interiorDim=" << r.interior_dim
       << " isInner=" << (r.is_inner ? "true" : "false");
    if (r.degenerate) os << " [degenerate: no constraints]";
    if (!r.inner_coordinates.empty()) {
      os << " coords=[";
      for (size_t i = 0; i < r.inner_coordinates.size(); ++i)
        os << (i ? "," : "") << r.inner_coordinates[i].str();
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace svb
