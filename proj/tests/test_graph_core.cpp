#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "specdet/canonical.hpp"
#include "specdet/error.hpp"
#include "specdet/families.hpp"
#include "specdet/graph.hpp"
#include "specdet/graph_io.hpp"
#include "specdet/structure.hpp"

using namespace specdet;

namespace {

Graph C(int n) { return generate(family::Cycle{n}); }
Graph K(int n) { return generate(family::Complete{n}); }
Graph E(int n) { return generate(family::Empty{n}); }
Graph P(int n) { return generate(family::Path{n}); }
Graph S(int n) { return generate(family::Star{n}); }

std::multiset<int> degree_multiset(const Graph& g) {
  auto d = g.degrees();
  return {d.begin(), d.end()};
}

}  // namespace

TEST(BuildGraph, CycleFromEdgeList) {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g, C(4));
  EXPECT_EQ(g.size(), 4u);
}

TEST(BuildGraph, SingleVertex) {
  Graph g = build_graph(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
}

TEST(BuildGraph, DuplicatesCollapse) {
  Graph g = build_graph(3, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(BuildGraph, RejectsLoopsAndRange) {
  EXPECT_THROW(build_graph(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), PreconditionError);
  EXPECT_THROW(build_graph(3, {{-1, 2}}), PreconditionError);
}

TEST(GraphInvariants, SymmetricAndLoopFree) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 70);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Families, FriendshipFour) {
  Graph f = generate(family::Friendship{4});
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.size(), 12u);
  EXPECT_EQ(triangle_count(f), 4);
  EXPECT_EQ(f.degree(0), 8);
}

TEST(Families, TuranPartSizes) {
  EXPECT_EQ(turan_parts(17, 7), (std::vector<int>{2, 2, 2, 2, 3, 3, 3}));
  EXPECT_EQ(turan_parts(6, 3), (std::vector<int>{2, 2, 2}));
}

TEST(Families, TuranDegreesMatchPartSizes) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 2; k <= n; ++k) {
      const int q = n / k, s = n % k;
      std::multiset<int> expected;
      for (int i = 0; i < k - s; ++i)
        for (int j = 0; j < q; ++j) expected.insert(n - q);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < q + 1; ++j) expected.insert(n - q - 1);
      EXPECT_EQ(degree_multiset(generate(family::Turan{n, k})), expected) << n << "," << k;
    }
}

TEST(Families, TuranRejectsBadParameters) {
  EXPECT_THROW(generate(family::Turan{3, 4}), PreconditionError);
  EXPECT_THROW(generate(family::Turan{5, 1}), PreconditionError);
}

TEST(Families, CompleteBipartite) {
  Graph g = generate(family::CompleteBipartite{2, 3});
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(degree_multiset(g), (std::multiset<int>{3, 3, 2, 2, 2}));
}

TEST(Families, Petersen) {
  Graph g = generate(family::Petersen{});
  auto r = structure_report(g);
  EXPECT_EQ(g.order(), 10);
  ASSERT_TRUE(r.regular);
  EXPECT_EQ(*r.degree, 3);
  EXPECT_EQ(r.girth, 5);
  EXPECT_EQ(r.diameter, 2);
}

TEST(Families, ShapesAndSizes) {
  EXPECT_EQ(generate(family::Pyramid{6, 3}).size(), 3u + 3u * 3u);
  EXPECT_EQ(generate(family::Wheel{6}).size(), 10u);
  EXPECT_EQ(generate(family::Lollipop{7, 4}).size(), 7u);
  EXPECT_EQ(generate(family::Sandglass{3}).order(), 7);
  EXPECT_EQ(generate(family::Sandglass{3}).size(), 8u);
  EXPECT_EQ(generate(family::GeneralizedFriendship{3, 2}).size(), 9u);
  EXPECT_EQ(generate(family::CompleteMultipartite{{1, 2, 3}}).size(), 11u);
  EXPECT_THROW(generate(family::Lollipop{4, 4}), PreconditionError);
}

TEST(Families, LatticeAndTriangularAreLineGraphs) {
  EXPECT_TRUE(oracle::isomorphic(generate(family::Triangular{4}), line_graph(K(4))));
  auto lat = structure_report(generate(family::Lattice{4}));
  EXPECT_EQ(lat.degrees.size(), 16u);
  EXPECT_EQ(*lat.degree, 6);
}

TEST(Families, NiceSunlikeDegrees) {
  Graph g = generate(family::NiceSunlike{12, {4, 6}});
  // cycle vertex 0 has one pendant, marked vertices 4 and 10 two each
  EXPECT_EQ(g.order(), 12 + 1 + 2 + 2);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(g.degree(10), 4);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_THROW(generate(family::NiceSunlike{12, {5}}), PreconditionError);
  EXPECT_THROW(generate(family::NiceSunlike{10, {4, 6}}), PreconditionError);
}

TEST(Complement, CompleteToEmptyAndInvolution) {
  EXPECT_EQ(complement(K(5)), E(5));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, t % 13);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Complement, FiveCycleIsSelfComplementary) { EXPECT_TRUE(oracle::isomorphic(complement(C(5)), C(5))); }

TEST(DisjointUnion, CycleAndVertex) {
  Graph g = disjoint_union(C(4), K(1));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(structure_report(g).components, 2);
}

TEST(DisjointUnion, SingleGraphListAndCopies) {
  std::vector<Graph> one{C(5)};
  EXPECT_EQ(disjoint_union(one), C(5));
  EXPECT_EQ(structure_report(disjoint_copies(K(2), 3)).components, 3);
}

TEST(Join, WheelPyramidBipartite) {
  EXPECT_TRUE(oracle::isomorphic(join(K(1), C(5)), generate(family::Wheel{6})));
  EXPECT_TRUE(oracle::isomorphic(join(E(2), E(3)), generate(family::CompleteBipartite{2, 3})));
  EXPECT_TRUE(oracle::isomorphic(join(K(3), E(3)), generate(family::Pyramid{6, 3})));
}

TEST(Join, CountFormulasOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Graph a = oracle::random_graph(rng, rng() % 7), b = oracle::random_graph(rng, rng() % 6);
    Graph u = disjoint_union(a, b), j = join(a, b);
    EXPECT_EQ(u.order(), a.order() + b.order());
    EXPECT_EQ(u.size(), a.size() + b.size());
    EXPECT_EQ(j.order(), a.order() + b.order());
    EXPECT_EQ(j.size(), a.size() + b.size() + static_cast<std::size_t>(a.order() * b.order()));
  }
}

TEST(LineGraph, Examples) {
  Graph t5 = line_graph(K(5));
  EXPECT_EQ(t5.order(), 10);
  EXPECT_EQ(*structure_report(t5).degree, 6);
  EXPECT_EQ(line_graph(P(3)), P(2));
  EXPECT_TRUE(oracle::isomorphic(complement(t5), generate(family::Petersen{})));
}

TEST(LineGraph, RegularInputGivesRegularOutput) {
  for (const auto& g : {C(7), K(5), generate(family::Petersen{}), generate(family::CompleteBipartite{3, 3})}) {
    auto r = structure_report(g);
    auto lr = structure_report(line_graph(g));
    ASSERT_TRUE(lr.regular);
    EXPECT_EQ(*lr.degree, 2 * *r.degree - 2);
    EXPECT_EQ(line_graph(g).order(), g.order() * *r.degree / 2);
  }
}

TEST(InducedSubgraph, Examples) {
  Graph c5 = C(5);
  std::vector<int> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(c5, all), c5);
  std::vector<int> three{0, 1, 2};
  EXPECT_EQ(induced_subgraph(c5, three), P(3));
  std::vector<int> any{1, 3, 4};
  EXPECT_EQ(induced_subgraph(K(5), any), K(3));
  std::vector<int> bad{0, 7};
  EXPECT_THROW(induced_subgraph(c5, bad), PreconditionError);
}

TEST(Structure, Examples) {
  auto r = structure_report(generate(family::CompleteBipartite{2, 3}));
  EXPECT_EQ(r.degrees, (std::vector<int>{3, 3, 2, 2, 2}));
  EXPECT_TRUE(r.bipartition.has_value());
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(structure_report(generate(family::Friendship{4})).triangles, 4);
  auto u = structure_report(disjoint_union(C(4), K(1)));
  EXPECT_EQ(u.components, 2);
  EXPECT_EQ(u.isolated, 1);
  EXPECT_EQ(u.bipartite_components, 2);
  EXPECT_FALSE(u.diameter.has_value());
  EXPECT_EQ(u.girth, 4);
  EXPECT_FALSE(structure_report(P(5)).girth.has_value());
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(canonical_form(C(4)), canonical_form(oracle::shuffled(C(4), rng)));
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 30, 0.3 + 0.002 * t);
    EXPECT_EQ(canonical_form(g), canonical_form(oracle::shuffled(g, rng)));
  }
}

TEST(Canonical, StarVersusCycleWithVertex) {
  Graph s5 = S(5), c4k1 = disjoint_union(C(4), K(1));
  EXPECT_NE(canonical_form(s5), canonical_form(c4k1));
  EXPECT_FALSE(are_isomorphic(s5, c4k1));
}

TEST(Canonical, ElevenFormsOnFourVertices) {
  std::set<CanonicalForm> forms;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++bit)
        if ((mask >> bit) & 1) g.add_edge(i, j);
    forms.insert(canonical_form(g));
  }
  EXPECT_EQ(forms.size(), 11u);
}

TEST(Canonical, AgreesWithPermutationSearchUpToSeven) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 7;
    Graph g = oracle::random_graph(rng, n), h = oracle::random_graph(rng, n);
    if (t % 3 == 0) h = oracle::shuffled(g, rng);
    // same degree sequence makes the comparison non-trivial
    if (t % 3 == 1) {
      h = g;
      for (int k = 0; k < 3; ++k) {
        int a = rng() % n, b = rng() % n, c = rng() % n, d = rng() % n;
        if (a != b && c != d && a != c && a != d && b != c && b != d && g.adjacent(a, b) && g.adjacent(c, d) &&
            !g.adjacent(a, c) && !g.adjacent(b, d)) {
          h.remove_edge(a, b);
          h.remove_edge(c, d);
          h.add_edge(a, c);
          h.add_edge(b, d);
        }
      }
    }
    EXPECT_EQ(are_isomorphic(g, h), oracle::isomorphic(g, h)) << emit_graph6(g) << " " << emit_graph6(h);
  }
}

TEST(Canonical, OrbitsMatchBruteForce) {
  std::mt19937_64 rng(6);
  std::vector<Graph> cases{C(6), K(4), S(6), generate(family::Petersen{}), disjoint_copies(K(2), 3)};
  for (int t = 0; t < 150; ++t) cases.push_back(oracle::random_graph(rng, 2 + t % 7, 0.2 + 0.004 * t));
  for (const auto& g : cases) {
    if (g.order() > 8 && g.order() != 10) continue;
    if (g.order() == 10) {
      // Petersen is vertex transitive
      auto lab = canonical_labeling(g);
      for (int v : lab.orbit) EXPECT_EQ(v, 0);
      continue;
    }
    EXPECT_EQ(canonical_labeling(g).orbit, oracle::orbits(g)) << emit_graph6(g);
  }
}

TEST(Canonical, GeneratorsAreAutomorphisms) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    Graph g = disjoint_copies(oracle::random_graph(rng, 3 + t % 5, 0.5), 1 + t % 4);
    auto lab = canonical_labeling(g);
    for (const auto& gamma : lab.generators) EXPECT_EQ(relabel(g, gamma), g);
    EXPECT_EQ(relabel(g, [&] {
                std::vector<int> inv(g.order());
                for (int i = 0; i < g.order(); ++i) inv[lab.order[i]] = i;
                return inv;
              }()),
              lab.form.graph());
  }
}

TEST(Canonical, HexIsStable) {
  EXPECT_EQ(canonical_form(K(1)).hex(), "1:");
  EXPECT_EQ(canonical_form(K(3)).hex(), "3:e");
  EXPECT_EQ(canonical_form(E(3)).hex(), "3:0");
}

TEST(Graph6, EmitSingleVertex) { EXPECT_EQ(emit_graph6(K(1)), "@"); }

TEST(Graph6, KnownStringAgreesWithIndependentDecoder) {
  Graph g = parse_graph6("D?{");
  EXPECT_EQ(g, oracle::decode_graph6("D?{"));
  EXPECT_EQ(g.order(), 5);
  EXPECT_TRUE(oracle::isomorphic(g, S(5)));
  EXPECT_EQ(emit_graph6(g), "D?{");
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    const int n = t < 450 ? static_cast<int>(rng() % 40) : 60 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(rng, n, 0.4);
    const auto s = emit_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(oracle::decode_graph6(s), g);
    EXPECT_EQ(emit_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, LongHeaders) {
  Graph g(100);
  g.add_edge(0, 99);
  const auto s = emit_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);    // too short
  EXPECT_THROW(parse_graph6("D?{?"), ParseError);  // too long
  EXPECT_THROW(parse_graph6("D?x"), ParseError);   // trailing bits set
  EXPECT_THROW(parse_graph6("D? "), ParseError);   // byte below 63
  EXPECT_THROW(parse_graph6("~??D"), ParseError);  // long header for n < 63
}

TEST(EdgeListJson, RoundTripAndErrors) {
  Graph g = generate(family::Petersen{});
  EXPECT_EQ(parse_edge_list_json(to_edge_list_json(g)), g);
  EXPECT_THROW(parse_edge_list_json("{\"n\": 2, \"edges\": [[0, 2]]}"), PreconditionError);
  EXPECT_THROW(parse_edge_list_json("{\"edges\": []}"), ParseError);
  EXPECT_THROW(parse_edge_list_json("not json"), ParseError);
}

TEST(Graph6Stream, SkipsHeaderAndBlankLines) {
  std::istringstream in(">>graph6<<D?{\n\nC~\n");
  auto gs = read_graph6_stream(in);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1], K(4));
}

TEST(Dot, ListsEveryVertexAndEdge) {
  auto dot = to_dot(P(3), "p");
  EXPECT_NE(dot.find("graph p {"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}
