#include "specdet/certificate.hpp"

#include <algorithm>
#include <future>

#include "specdet/constructions.hpp"
#include "specdet/error.hpp"
#include "specdet/structure.hpp"

namespace specdet {
namespace {

struct RecipeInfo {
  Recipe recipe;
  const char* name;
};

constexpr RecipeInfo kRecipes[] = {
    {Recipe::ns_join, "ns-join"},
    {Recipe::nns_join, "nns-join"},
    {Recipe::sb_vv, "sb-vv"},
    {Recipe::sb_ee, "sb-ee"},
    {Recipe::sb_ev, "sb-ev"},
    {Recipe::sb_ve, "sb-ve"},
    {Recipe::duplication_corona, "duplication-corona"},
    {Recipe::duplication_neighborhood_corona, "duplication-neighborhood-corona"},
    {Recipe::duplication_edge_corona, "duplication-edge-corona"},
    {Recipe::closed_neighborhood_corona_left, "closed-neighborhood-corona-left"},
    {Recipe::closed_neighborhood_corona_right, "closed-neighborhood-corona-right"},
};

enum class Family { splitting, sb, duplication, closed };

Family family_of(Recipe r) {
  switch (r) {
    case Recipe::ns_join:
    case Recipe::nns_join: return Family::splitting;
    case Recipe::sb_vv:
    case Recipe::sb_ee:
    case Recipe::sb_ev:
    case Recipe::sb_ve: return Family::sb;
    case Recipe::duplication_corona:
    case Recipe::duplication_neighborhood_corona:
    case Recipe::duplication_edge_corona: return Family::duplication;
    default: return Family::closed;
  }
}

std::optional<int> regular_degree(const Graph& g) {
  const auto d = g.degrees();
  if (d.empty()) return 0;
  if (!std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; })) return std::nullopt;
  return d[0];
}

void need_regular(const Graph& g, const char* which) {
  if (!regular_degree(g)) throw PreconditionError(std::string("hypothesis violated: seed ") + which + " is not regular");
}

void need_cospectral(const Graph& a, const Graph& b, const char* which) {
  if (!are_cospectral(a, b, {MatrixKind::A}))
    throw PreconditionError(std::string("hypothesis violated: seed pair ") + which + " is not A-cospectral");
}

void need_nonisomorphic(const Graph& a, const Graph& b, const char* which) {
  if (are_isomorphic(a, b))
    throw PreconditionError(std::string("hypothesis violated: seed pair ") + which + " is isomorphic");
}

void validate(Recipe r, const SeedPairs& s) {
  switch (family_of(r)) {
    case Family::splitting:
    case Family::duplication:
      need_regular(s.g1, "G1");
      need_regular(s.h1, "H1");
      need_regular(s.g2, "G2");
      need_regular(s.h2, "H2");
      need_cospectral(s.g1, s.h1, "(G1, H1)");
      need_cospectral(s.g2, s.h2, "(G2, H2)");
      need_nonisomorphic(s.g2, s.h2, "(G2, H2)");
      break;
    case Family::sb:
      need_regular(s.g1, "G1");
      need_regular(s.h1, "H1");
      need_regular(s.g2, "G2");
      need_regular(s.h2, "H2");
      need_cospectral(s.g1, s.h1, "(G1, H1)");
      need_cospectral(s.g2, s.h2, "(G2, H2)");
      if (are_isomorphic(s.g1, s.h1) && are_isomorphic(s.g2, s.h2))
        throw PreconditionError("hypothesis violated: both seed pairs are isomorphic");
      break;
    case Family::closed:
      need_regular(s.g1, "G1");
      need_regular(s.h1, "H1");
      need_cospectral(s.g1, s.h1, "(G1, H1)");
      need_nonisomorphic(s.g1, s.h1, "(G1, H1)");
      break;
  }
}

SpectralFingerprint parallel_fingerprint(const Graph& g, const std::vector<MatrixKind>& kinds) {
  std::vector<std::future<CharPoly>> jobs;
  for (auto k : kinds) jobs.push_back(std::async(std::launch::async, [&g, k] { return char_poly(g, k); }));
  SpectralFingerprint fp;
  for (std::size_t i = 0; i < kinds.size(); ++i) fp.emplace(kinds[i], jobs[i].get());
  return fp;
}

}  // namespace

std::string recipe_name(Recipe r) {
  for (const auto& info : kRecipes)
    if (info.recipe == r) return info.name;
  return "?";
}

Recipe parse_recipe(const std::string& name) {
  for (const auto& info : kRecipes)
    if (name == info.name) return info.recipe;
  throw PreconditionError("unknown recipe: " + name);
}

std::vector<Recipe> all_recipes() {
  std::vector<Recipe> out;
  for (const auto& info : kRecipes) out.push_back(info.recipe);
  return out;
}

std::vector<MatrixKind> recipe_kinds(Recipe r) {
  using K = MatrixKind;
  switch (family_of(r)) {
    case Family::splitting: return {K::A, K::L, K::Q, K::NL};
    case Family::sb: return {K::A, K::L, K::NL};
    default: return {K::A, K::L, K::Q};
  }
}

std::vector<MatrixKind> recipe_open_kinds(Recipe r) {
  switch (family_of(r)) {
    case Family::splitting: return {};
    case Family::sb: return {MatrixKind::Q};
    default: return {MatrixKind::NL};
  }
}

std::pair<Graph, Graph> recipe_outputs(Recipe r, const SeedPairs& s) {
  switch (r) {
    case Recipe::ns_join:
      return {splitting_join(SplitKind::NS, s.g1, s.g2), splitting_join(SplitKind::NS, s.h1, s.h2)};
    case Recipe::nns_join:
      return {splitting_join(SplitKind::NNS, s.g1, s.g2), splitting_join(SplitKind::NNS, s.h1, s.h2)};
    case Recipe::sb_vv: return {sb_join(SbJoinKind::vv, s.g1, s.g2), sb_join(SbJoinKind::vv, s.h1, s.h2)};
    case Recipe::sb_ee: return {sb_join(SbJoinKind::ee, s.g1, s.g2), sb_join(SbJoinKind::ee, s.h1, s.h2)};
    case Recipe::sb_ev: return {sb_join(SbJoinKind::ev, s.g1, s.g2), sb_join(SbJoinKind::ev, s.h1, s.h2)};
    case Recipe::sb_ve: return {sb_join(SbJoinKind::ve, s.g1, s.g2), sb_join(SbJoinKind::ve, s.h1, s.h2)};
    case Recipe::duplication_corona:
      return {corona_product(CoronaKind::duplication, s.g1, s.g2),
              corona_product(CoronaKind::duplication, s.h1, s.h2)};
    case Recipe::duplication_neighborhood_corona:
      return {corona_product(CoronaKind::duplication_neighborhood, s.g1, s.g2),
              corona_product(CoronaKind::duplication_neighborhood, s.h1, s.h2)};
    case Recipe::duplication_edge_corona:
      return {corona_product(CoronaKind::duplication_edge, s.g1, s.g2),
              corona_product(CoronaKind::duplication_edge, s.h1, s.h2)};
    case Recipe::closed_neighborhood_corona_left:
      return {corona_product(CoronaKind::closed_neighborhood, s.g1, s.g2),
              corona_product(CoronaKind::closed_neighborhood, s.h1, s.g2)};
    case Recipe::closed_neighborhood_corona_right:
      return {corona_product(CoronaKind::closed_neighborhood, s.g2, s.g1),
              corona_product(CoronaKind::closed_neighborhood, s.g2, s.h1)};
  }
  throw PreconditionError("unknown recipe");
}

NicsCertificate certified_nics(Recipe recipe, const SeedPairs& seeds, bool measure_open) {
  validate(recipe, seeds);
  NicsCertificate c{recipe, seeds, recipe_kinds(recipe), recipe_outputs(recipe, seeds), {}, {}, {}};
  c.fingerprints = {parallel_fingerprint(c.graphs.first, c.kinds), parallel_fingerprint(c.graphs.second, c.kinds)};
  for (auto k : c.kinds)
    if (c.fingerprints.first.at(k) != c.fingerprints.second.at(k))
      throw std::logic_error("certificate: outputs of " + recipe_name(recipe) + " differ on " + kind_name(k));
  c.canonical = {canonical_form(c.graphs.first), canonical_form(c.graphs.second)};
  if (c.canonical.first == c.canonical.second)
    throw std::logic_error("certificate: outputs of " + recipe_name(recipe) + " are isomorphic");
  if (regular_degree(c.graphs.first) || regular_degree(c.graphs.second))
    throw std::logic_error("certificate: outputs of " + recipe_name(recipe) + " are regular");
  if (measure_open) {
    const auto open = recipe_open_kinds(recipe);
    const auto a = parallel_fingerprint(c.graphs.first, open), b = parallel_fingerprint(c.graphs.second, open);
    for (auto k : open) c.open_kinds[k] = a.at(k) == b.at(k);
  }
  return c;
}

}  // namespace specdet
