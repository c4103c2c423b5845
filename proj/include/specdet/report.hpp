#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "specdet/closed_spectrum.hpp"
#include "specdet/graph.hpp"
#include "specdet/invariants.hpp"
#include "specdet/spectra.hpp"

namespace specdet {

nlohmann::json charpoly_json(MatrixKind kind, const CharPoly& p);
nlohmann::json closed_spectrum_json(const ClosedSpectrum& s);
nlohmann::json srg_json(const SrgParams& p);

struct InvariantReport {
  long long edges = 0;
  long long triangles = 0;
  std::optional<int> regular;
  bool bipartite = false;
  int components = 0;
  std::optional<SrgParams> srg;
  std::optional<QuadraticNumber> theta;
};

// Built from the A- and L-characteristic polynomials only.
InvariantReport invariant_report(const Graph& g);
nlohmann::json invariant_report_json(const InvariantReport& r);

}  // namespace specdet
