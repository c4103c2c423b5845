#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "specdet/canonical.hpp"
#include "specdet/census.hpp"
#include "specdet/certificate.hpp"
#include "specdet/constructions.hpp"
#include "specdet/enumerate.hpp"
#include "specdet/error.hpp"
#include "specdet/families.hpp"
#include "specdet/formulas.hpp"
#include "specdet/graph_io.hpp"
#include "specdet/invariants.hpp"
#include "specdet/report.hpp"
#include "specdet/spectra.hpp"
#include "specdet/structure.hpp"

namespace specdet::cli {
namespace {

using nlohmann::json;

struct Flags {
  std::string kinds = "A,L,Q,NL";
  std::optional<int> n, k, p, q;
  std::string family;
  std::string parts, steps;
  std::string out = "g6";
  int jobs = 0;
  std::uint64_t seed = 0;
  std::string cache_dir;
  bool allow_n10 = false;
  std::vector<std::string> inputs;

  // command-specific
  std::optional<int> regular;
  bool connected = false;
  bool roots = false;
  std::string graph;
  std::optional<int> n_max;
  std::string nics_out;
  std::string op;
  std::string set, block;
  int v1 = 0, v2 = 0;
  int max_size = 0;
  bool independent = false;
  std::string recipe;
  std::string params;
};

std::vector<int> parse_ints(const std::string& csv, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      require(used == item.size(), "");
    } catch (const std::exception&) {
      throw PreconditionError(flag + " expects comma-separated integers, got '" + csv + "'");
    }
  }
  return out;
}

int need(const std::optional<int>& v, const char* flag, const std::string& what) {
  require(v.has_value(), std::string(flag) + " is required for " + what);
  return *v;
}

FamilySpec family_spec(const Flags& f) {
  const std::string& name = f.family;
  if (name == "complete") return family::Complete{need(f.n, "--n", name)};
  if (name == "empty") return family::Empty{need(f.n, "--n", name)};
  if (name == "path") return family::Path{need(f.n, "--n", name)};
  if (name == "cycle") return family::Cycle{need(f.n, "--n", name)};
  if (name == "star") return family::Star{need(f.n, "--n", name)};
  if (name == "complete-bipartite") return family::CompleteBipartite{need(f.p, "--p", name), need(f.q, "--q", name)};
  if (name == "multipartite") {
    require(!f.parts.empty(), "--parts is required for multipartite");
    return family::CompleteMultipartite{parse_ints(f.parts, "--parts")};
  }
  if (name == "turan") return family::Turan{need(f.n, "--n", name), need(f.k, "--k", name)};
  if (name == "pyramid") return family::Pyramid{need(f.n, "--n", name), need(f.k, "--k", name)};
  if (name == "friendship") return family::Friendship{need(f.p, "--p", name)};
  if (name == "generalized-friendship")
    return family::GeneralizedFriendship{need(f.p, "--p", name), need(f.q, "--q", name)};
  if (name == "wheel") return family::Wheel{need(f.n, "--n", name)};
  if (name == "lollipop") return family::Lollipop{need(f.n, "--n", name), need(f.p, "--p", name)};
  if (name == "sandglass") return family::Sandglass{need(f.n, "--n", name)};
  if (name == "petersen") return family::Petersen{};
  if (name == "lattice") return family::Lattice{need(f.q, "--q", name)};
  if (name == "triangular") return family::Triangular{need(f.k, "--k", name)};
  if (name == "nice") {
    require(!f.steps.empty(), "--steps is required for nice");
    return family::NiceSunlike{need(f.n, "--n", name), parse_ints(f.steps, "--steps")};
  }
  throw PreconditionError("unknown family: " + name);
}

std::vector<Graph> read_inputs(const std::vector<std::string>& paths) {
  std::vector<Graph> out;
  for (const auto& path : paths) {
    std::vector<Graph> gs;
    if (path == "-") gs = read_graph6_stream(std::cin);
    else gs = read_graph_file(path);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

// Graphs from --family when given, otherwise from the positional inputs.
std::vector<Graph> subject_graphs(const Flags& f) {
  if (!f.family.empty()) return {generate(family_spec(f))};
  require(!f.inputs.empty(), "no input graphs (give files or --family)");
  auto gs = read_inputs(f.inputs);
  require(!gs.empty(), "input files contain no graphs");
  return gs;
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "g6") out << emit_graph6(g) << '\n';
  else if (format == "json") out << to_edge_list_json(g) << '\n';
  else if (format == "dot") out << to_dot(g);
  else throw PreconditionError("unknown output format: " + format);
}

int jobs_of(const Flags& f) {
  if (f.jobs > 0) return f.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<ClosedSpectrum> closed_form(const Flags& f) {
  if (f.family == "turan") return turan_spectrum(*f.n, *f.k);
  if (f.family == "complete-bipartite") return complete_bipartite_spectrum(*f.p, *f.q);
  if (f.family == "multipartite") {
    auto parts = parse_ints(f.parts, "--parts");
    if (!parts.empty() && std::all_of(parts.begin(), parts.end(), [&](int s) { return s == parts[0]; }))
      return regular_multipartite_spectrum(parts[0], static_cast<int>(parts.size()));
  }
  return std::nullopt;
}

int cmd_gen(const Flags& f, std::ostream& out) {
  if (!f.family.empty()) {
    write_graph(out, generate(family_spec(f)), f.out);
    return 0;
  }
  const int n = need(f.n, "--n", "gen without --family");
  auto emit = [&](const Graph& g) { write_graph(out, g, f.out); };
  if (f.regular) {
    enumerate_regular(n, *f.regular, emit, f.connected);
  } else {
    GraphPredicate keep;
    if (f.connected) keep = [](const Graph& g) { return is_connected(g); };
    enumerate_graphs(n, emit, {f.allow_n10, jobs_of(f)}, keep);
  }
  return 0;
}

int cmd_spectrum(const Flags& f, std::ostream& out) {
  const auto kinds = parse_kinds(f.kinds);
  for (const auto& g : subject_graphs(f)) {
    json row;
    row["graph"] = emit_graph6(g);
    row["charpolys"] = json::array();
    for (auto k : kinds) {
      auto p = char_poly(g, k);
      auto entry = charpoly_json(k, p);
      if (f.roots) entry["roots"] = real_roots(p);
      row["charpolys"].push_back(entry);
    }
    if (!f.family.empty())
      if (auto closed = closed_form(f)) row["closed"] = closed_spectrum_json(*closed);
    out << row.dump() << '\n';
  }
  return 0;
}

int cmd_cospectral(const Flags& f, std::ostream& out) {
  auto gs = read_inputs(f.inputs);
  require(gs.size() >= 2, "cospectral needs two graphs");
  if (gs.size() > 2 && f.inputs.size() == 2) {
    // one graph per file: take the first of each
    gs = {read_graph_file(f.inputs[0]).at(0), read_graph_file(f.inputs[1]).at(0)};
  }
  require(gs[0].order() == gs[1].order(), "graphs have different orders");
  if (auto k = first_difference(gs[0], gs[1], parse_kinds(f.kinds))) out << "DIFFER kind=" << kind_name(*k) << '\n';
  else out << "COSPECTRAL\n";
  return 0;
}

int cmd_invariants(const Flags& f, std::ostream& out) {
  for (const auto& g : subject_graphs(f)) {
    auto row = invariant_report_json(invariant_report(g));
    row["graph"] = emit_graph6(g);
    out << row.dump() << '\n';
  }
  return 0;
}

int cmd_srg(const Flags& f, std::ostream& out) {
  auto describe = [](const SrgParams& p, const SrgSpectrum& s) {
    json j;
    j["params"] = srg_json(p);
    j["spectrum"] = closed_spectrum_json(s.closed());
    j["theta"] = p.mu > 0 ? json(lovasz_theta_srg(p).to_string()) : json(nullptr);
    return j;
  };
  if (!f.params.empty()) {
    auto v = parse_ints(f.params, "--params");
    require(v.size() == 4, "--params expects n,d,lambda,mu");
    SrgParams p{v[0], v[1], v[2], v[3]};
    json j;
    j["feasible"] = srg_feasible(p);
    if (*j["feasible"].get_ptr<const bool*>()) j.update(describe(p, srg_spectrum(p)));
    else j["params"] = srg_json(p);
    out << j.dump() << '\n';
    return 0;
  }
  for (const auto& g : subject_graphs(f)) {
    json j;
    j["graph"] = emit_graph6(g);
    if (auto hit = detect_srg(char_poly(g, MatrixKind::A), g.order())) j.update(describe(hit->first, hit->second));
    else j["params"] = nullptr;
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_ds(const Flags& f, std::ostream& out) {
  std::vector<Graph> gs;
  if (!f.graph.empty()) gs = read_graph_file(f.graph);
  else gs = subject_graphs(f);
  require(!gs.empty(), "no input graph");
  const auto kinds = parse_kinds(f.kinds);
  for (const auto& g : gs) {
    auto verdict = ds_verdict(g, kinds, jobs_of(f), f.allow_n10);
    json j;
    j["graph"] = emit_graph6(g);
    j["kinds"] = json::array();
    for (auto k : kinds) j["kinds"].push_back(kind_name(k));
    j["ds"] = verdict.ds();
    j["mates"] = json::array();
    for (const auto& m : verdict.mates) j["mates"].push_back(emit_graph6(m));
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_census(const Flags& f, std::ostream& out, std::ostream& err) {
  const int lo = need(f.n, "--n", "census");
  const int hi = f.n_max.value_or(lo);
  require(lo <= hi, "--n-max must not be below --n");
  const auto kinds = parse_kinds(f.kinds);
  std::optional<FingerprintCache> cache;
  std::optional<std::filesystem::path> fallback;
  if (!f.cache_dir.empty()) fallback = f.cache_dir;
  if (auto dir = FingerprintCache::resolve_dir(fallback)) cache.emplace(*dir);

  std::ofstream nics;
  if (!f.nics_out.empty()) {
    nics.open(f.nics_out);
    if (!nics) throw IoError("cannot write " + f.nics_out);
  }
  for (int n = lo; n <= hi; ++n) {
    CensusOptions options;
    options.jobs = jobs_of(f);
    options.allow_n10 = f.allow_n10;
    options.cache = cache ? &*cache : nullptr;
    options.progress = [&err, n](long long done) { err << "census n=" << n << ": " << done << " graphs\n"; };
    auto row = ds_census(n, kinds, options);
    out << census_row_json(row).dump() << '\n';
    out.flush();
    for (const auto& cls : row.nics_classes) {
      for (const auto& g6 : cls) nics << g6 << '\n';
      nics << '\n';
    }
  }
  return 0;
}

Graph construct(const Flags& f, const std::vector<Graph>& gs, std::ostream& err) {
  auto arg = [&](std::size_t i) -> const Graph& {
    require(i < gs.size(), "--op " + f.op + " needs " + std::to_string(i + 1) + " input graph(s)");
    return gs[i];
  };
  const std::string& op = f.op;
  if (op == "complement") return complement(arg(0));
  if (op == "line") return line_graph(arg(0));
  if (op == "union") return disjoint_union(arg(0), arg(1));
  if (op == "join") return join(arg(0), arg(1));
  if (op == "duplication") return duplication(arg(0));
  if (op == "subdivision") return subdivision(arg(0));
  if (op == "incidence") return bipartite_incidence(arg(0));
  if (op == "corona") return corona_product(CoronaKind::corona, arg(0), arg(1));
  if (op == "edge-corona") return corona_product(CoronaKind::edge, arg(0), arg(1));
  if (op == "duplication-corona") return corona_product(CoronaKind::duplication, arg(0), arg(1));
  if (op == "duplication-neighborhood-corona")
    return corona_product(CoronaKind::duplication_neighborhood, arg(0), arg(1));
  if (op == "duplication-edge-corona") return corona_product(CoronaKind::duplication_edge, arg(0), arg(1));
  if (op == "closed-neighborhood-corona") return corona_product(CoronaKind::closed_neighborhood, arg(0), arg(1));
  if (op == "sb-vv") return sb_join(SbJoinKind::vv, arg(0), arg(1));
  if (op == "sb-ee") return sb_join(SbJoinKind::ee, arg(0), arg(1));
  if (op == "sb-ev") return sb_join(SbJoinKind::ev, arg(0), arg(1));
  if (op == "sb-ve") return sb_join(SbJoinKind::ve, arg(0), arg(1));
  if (op == "ns-join") return splitting_join(SplitKind::NS, arg(0), arg(1));
  if (op == "nns-join") return splitting_join(SplitKind::NNS, arg(0), arg(1));
  if (op == "coalesce") return coalesce(arg(0), f.v1, arg(1), f.v2);
  if (op == "gm") {
    require(!f.block.empty(), "--block is required for gm");
    return gm_switch(arg(0), parse_ints(f.block, "--block"));
  }
  if (op == "seidel") {
    std::vector<int> u;
    if (!f.set.empty()) {
      u = parse_ints(f.set, "--set");
    } else {
      const int max_size = f.max_size > 0 ? f.max_size : arg(0).order() / 2;
      err << "searching switching sets up to size " << max_size << '\n';
      auto found = find_seidel_switching_set(arg(0), max_size, f.seed, f.independent);
      require(found.has_value(), "no switching set found that gives a non-isomorphic graph");
      u = *found;
    }
    return seidel_switch(arg(0), u);
  }
  throw PreconditionError("unknown operation: " + op);
}

int cmd_construct(const Flags& f, std::ostream& out, std::ostream& err) {
  write_graph(out, construct(f, read_inputs(f.inputs), err), f.out);
  return 0;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  auto gs = read_inputs(f.inputs);
  require(gs.size() == 2 || gs.size() == 4, "certify needs 2 seed graphs (used twice) or 4");
  SeedPairs seeds = gs.size() == 4 ? SeedPairs{gs[0], gs[1], gs[2], gs[3]} : SeedPairs{gs[0], gs[1], gs[0], gs[1]};
  std::vector<Recipe> recipes;
  if (f.recipe == "all") recipes = all_recipes();
  else recipes = {parse_recipe(f.recipe)};
  for (auto r : recipes) out << certificate_json(certified_nics(r, seeds)) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral tools for small graphs", "specdet"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* c) {
    c->add_option("--kinds", f.kinds, "Matrix kinds, e.g. A,L,Q,NL,cA");
    c->add_option("--jobs", f.jobs, "Worker threads (default: logical cores)");
    c->add_option("--seed", f.seed, "Seed for randomized searches");
    c->add_option("--out", f.out, "Graph output format: g6, json or dot");
    c->add_option("--cache-dir", f.cache_dir, "Fingerprint cache directory (SPECDET_CACHE overrides)");
    c->add_flag("--allow-n10", f.allow_n10, "Permit the long-running n = 10 enumeration");
  };
  auto family_flags = [&f](CLI::App* c) {
    c->add_option("--family", f.family, "Graph family name");
    c->add_option("--n", f.n, "Vertex count (or cycle length / path length)");
    c->add_option("--k", f.k, "Part count / clique size");
    c->add_option("--p", f.p);
    c->add_option("--q", f.q);
    c->add_option("--parts", f.parts, "Comma-separated part sizes");
    c->add_option("--steps", f.steps, "Comma-separated steps between marked cycle vertices");
  };

  auto* gen = app.add_subcommand("gen", "Generate a family member, or enumerate graphs on --n vertices");
  common(gen);
  family_flags(gen);
  gen->add_option("--regular", f.regular, "Only d-regular graphs");
  gen->add_flag("--connected", f.connected, "Only connected graphs");

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomials per matrix kind");
  common(spectrum);
  family_flags(spectrum);
  spectrum->add_flag("--roots", f.roots, "Add numeric roots");
  spectrum->add_option("inputs", f.inputs, "graph6 or JSON edge-list files ('-' for stdin)");

  auto* cospectral = app.add_subcommand("cospectral", "Compare two graphs on the given kinds");
  common(cospectral);
  cospectral->add_option("inputs", f.inputs)->required();

  auto* invariants = app.add_subcommand("invariants", "Invariants read off the A and L spectra");
  common(invariants);
  family_flags(invariants);
  invariants->add_option("inputs", f.inputs);

  auto* srg = app.add_subcommand("srg", "Strongly regular parameters from the spectrum");
  common(srg);
  family_flags(srg);
  srg->add_option("--params", f.params, "n,d,lambda,mu instead of input graphs");
  srg->add_option("inputs", f.inputs);

  auto* ds = app.add_subcommand("ds", "Search all graphs of the same order for cospectral mates");
  common(ds);
  family_flags(ds);
  ds->add_option("--graph", f.graph, "Input graph file");
  ds->add_option("inputs", f.inputs);

  auto* census = app.add_subcommand("census", "Cospectral-class census over all graphs on n vertices");
  common(census);
  census->add_option("--n", f.n)->required();
  census->add_option("--n-max", f.n_max, "Run every order from --n to --n-max");
  census->add_option("--nics-out", f.nics_out, "Write non-singleton classes as graph6 groups");

  auto* construct_cmd = app.add_subcommand("construct", "Apply a graph operation to input graphs");
  common(construct_cmd);
  construct_cmd->add_option("--op", f.op, "Operation name")->required();
  construct_cmd->add_option("--set", f.set, "Seidel switching set");
  construct_cmd->add_option("--block", f.block, "GM switching block");
  construct_cmd->add_option("--v1", f.v1);
  construct_cmd->add_option("--v2", f.v2);
  construct_cmd->add_option("--max-size", f.max_size, "Largest switching set to search");
  construct_cmd->add_flag("--independent", f.independent, "Search independent switching sets only");
  construct_cmd->add_option("inputs", f.inputs);

  auto* certify = app.add_subcommand("certify", "Build and verify a cospectral non-isomorphic pair");
  common(certify);
  certify->add_option("--recipe", f.recipe, "Recipe name or 'all'")->required();
  certify->add_option("inputs", f.inputs)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*gen) return cmd_gen(f, out);
    if (*spectrum) return cmd_spectrum(f, out);
    if (*cospectral) return cmd_cospectral(f, out);
    if (*invariants) return cmd_invariants(f, out);
    if (*srg) return cmd_srg(f, out);
    if (*ds) return cmd_ds(f, out);
    if (*census) return cmd_census(f, out, err);
    if (*construct_cmd) return cmd_construct(f, out, err);
    if (*certify) return cmd_certify(f, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace specdet::cli
