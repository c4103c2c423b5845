#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specdet/canonical.hpp"
#include "specdet/graph.hpp"
#include "specdet/spectra.hpp"

namespace specdet {

enum class Recipe {
  ns_join,
  nns_join,
  sb_vv,
  sb_ee,
  sb_ev,
  sb_ve,
  duplication_corona,
  duplication_neighborhood_corona,
  duplication_edge_corona,
  closed_neighborhood_corona_left,   // G ⊡ H over a cospectral regular pair G
  closed_neighborhood_corona_right,  // H ⊡ G
};

std::string recipe_name(Recipe r);
Recipe parse_recipe(const std::string& name);
std::vector<Recipe> all_recipes();
std::vector<MatrixKind> recipe_kinds(Recipe r);       // kinds the construction guarantees
std::vector<MatrixKind> recipe_open_kinds(Recipe r);  // measured and reported, never asserted

// (g1, h1) is the first seed pair, (g2, h2) the second. For the closed
// neighbourhood recipes the first pair is the cospectral regular pair and g2
// plays the arbitrary graph (h2 is ignored).
struct SeedPairs {
  Graph g1, h1, g2, h2;
};

struct NicsCertificate {
  Recipe recipe;
  SeedPairs seeds;
  std::vector<MatrixKind> kinds;
  std::pair<Graph, Graph> graphs;
  std::pair<SpectralFingerprint, SpectralFingerprint> fingerprints;
  std::pair<CanonicalForm, CanonicalForm> canonical;
  std::map<MatrixKind, bool> open_kinds;  // kind -> outputs cospectral on it
};

// Throws PreconditionError naming the violated hypothesis and seed, and
// std::logic_error if a verified output ever contradicts the construction.
NicsCertificate certified_nics(Recipe recipe, const SeedPairs& seeds, bool measure_open = true);
std::pair<Graph, Graph> recipe_outputs(Recipe recipe, const SeedPairs& seeds);

std::string certificate_json(const NicsCertificate& c);

}  // namespace specdet
