#include "specdet/report.hpp"

#include "specdet/certificate.hpp"
#include "specdet/graph_io.hpp"

namespace specdet {

nlohmann::json charpoly_json(MatrixKind kind, const CharPoly& p) {
  return {{"kind", kind_name(kind)}, {"coeffs", p.descending_strings()}};
}

nlohmann::json closed_spectrum_json(const ClosedSpectrum& s) {
  auto out = nlohmann::json::array();
  for (const auto& e : s.entries()) {
    nlohmann::json value = {{"a", e.value.a().get_str()}, {"b", e.value.b().get_str()}};
    if (e.value.delta().fits_slong_p()) value["delta"] = e.value.delta().get_si();
    else value["delta"] = e.value.delta().get_str();
    out.push_back({{"value", value}, {"mult", e.mult}});
  }
  return out;
}

nlohmann::json srg_json(const SrgParams& p) {
  return {{"n", p.n}, {"d", p.d}, {"lambda", p.lambda}, {"mu", p.mu}};
}

InvariantReport invariant_report(const Graph& g) {
  const int n = g.order();
  const CharPoly pa = char_poly(g, MatrixKind::A);
  const CharPoly pl = char_poly(g, MatrixKind::L);
  InvariantReport r;
  r.edges = edges_from_spectrum(pa);
  r.triangles = triangles_from_spectrum(pa);
  if (n > 0) r.regular = is_regular_from_spectrum(pa, n);
  r.bipartite = is_bipartite_from_A(pa);
  r.components = components_from_L(pl);
  if (auto srg = detect_srg(pa, n)) {
    r.srg = srg->first;
    if (srg->first.mu > 0) r.theta = lovasz_theta_srg(srg->first);
  }
  return r;
}

nlohmann::json invariant_report_json(const InvariantReport& r) {
  nlohmann::json j;
  j["edges"] = r.edges;
  j["triangles"] = r.triangles;
  j["regular"] = r.regular ? nlohmann::json(*r.regular) : nlohmann::json(nullptr);
  j["bipartite"] = r.bipartite;
  j["components"] = r.components;
  j["srg"] = r.srg ? srg_json(*r.srg) : nlohmann::json(nullptr);
  j["theta"] = r.theta ? nlohmann::json(r.theta->to_string()) : nlohmann::json(nullptr);
  return j;
}

std::string certificate_json(const NicsCertificate& c) {
  nlohmann::json j;
  j["recipe"] = {{"operation", recipe_name(c.recipe)},
                 {"seeds", {emit_graph6(c.seeds.g1), emit_graph6(c.seeds.h1), emit_graph6(c.seeds.g2),
                            emit_graph6(c.seeds.h2)}}};
  j["kinds"] = nlohmann::json::array();
  for (auto k : c.kinds) j["kinds"].push_back(kind_name(k));
  j["graphs"] = {emit_graph6(c.graphs.first), emit_graph6(c.graphs.second)};
  j["charpolys"] = nlohmann::json::object();
  for (const auto& [k, p] : c.fingerprints.first) j["charpolys"][kind_name(k)] = charpoly_json(k, p);
  j["canonical"] = {c.canonical.first.hex(), c.canonical.second.hex()};
  j["open"] = nlohmann::json::object();
  for (const auto& [k, same] : c.open_kinds) j["open"][kind_name(k)] = same;
  return j.dump();
}

}  // namespace specdet
