#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "specdet/enumerate.hpp"
#include "specdet/error.hpp"
#include "specdet/families.hpp"
#include "specdet/graph.hpp"
#include "specdet/graph_io.hpp"
#include "specdet/spectra.hpp"
#include "specdet/structure.hpp"

using namespace specdet;

namespace {

Graph C(int n) { return generate(family::Cycle{n}); }
Graph K(int n) { return generate(family::Complete{n}); }
Graph S(int n) { return generate(family::Star{n}); }

Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(c);
}

Polynomial from_roots(const std::vector<std::pair<long, int>>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (auto [r, m] : roots) p = p * power(Polynomial::x_minus(r), m);
  return p;
}

oracle::Kind to_oracle(MatrixKind k) {
  switch (base_kind(k)) {
    case MatrixKind::A: return oracle::Kind::A;
    case MatrixKind::L: return oracle::Kind::L;
    case MatrixKind::Q: return oracle::Kind::Q;
    default: return oracle::Kind::NL;
  }
}

Polynomial oracle_poly(const Graph& g, MatrixKind k) {
  const Graph& h = is_complement_kind(k) ? complement(g) : g;
  return Polynomial(oracle::char_poly(oracle::matrix(h, to_oracle(k))));
}

}  // namespace

TEST(CharPoly, AllGraphsUpToSixAgainstDeterminantOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n))
      for (MatrixKind k : kAllKinds) ASSERT_EQ(char_poly(g, k), oracle_poly(g, k)) << emit_graph6(g) << kind_name(k);
}

TEST(CharPoly, RandomLargerGraphsAgainstOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_graph(rng, 7 + t % 6, 0.3 + 0.01 * t);
    for (MatrixKind k : {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NL})
      ASSERT_EQ(char_poly(g, k), oracle_poly(g, k)) << emit_graph6(g) << kind_name(k);
  }
}

TEST(CharPoly, StarOnFiveVertices) { EXPECT_EQ(char_poly(S(5), MatrixKind::A), poly({0, 0, 0, -4, 0, 1})); }

TEST(CharPoly, CompleteBipartiteTwoThree) {
  Graph k23 = generate(family::CompleteBipartite{2, 3});
  EXPECT_EQ(char_poly(k23, MatrixKind::L), from_roots({{0, 1}, {2, 2}, {3, 1}, {5, 1}}));
  EXPECT_EQ(char_poly(k23, MatrixKind::NL), from_roots({{0, 1}, {1, 3}, {2, 1}}));
}

TEST(CharPoly, CycleAndClawShareNormalizedLaplacianOnly) {
  Graph c4 = C(4), k13 = S(4);
  EXPECT_EQ(char_poly(c4, MatrixKind::NL), char_poly(k13, MatrixKind::NL));
  EXPECT_NE(char_poly(c4, MatrixKind::A), char_poly(k13, MatrixKind::A));
  EXPECT_EQ(first_difference(c4, k13, {MatrixKind::A, MatrixKind::NL}), MatrixKind::A);
  EXPECT_FALSE(are_cospectral(c4, k13, {MatrixKind::NL, MatrixKind::A}));
  EXPECT_TRUE(are_cospectral(c4, k13, {MatrixKind::NL}));
}

TEST(CharPoly, MonicWithLowOrderCoefficientsFromCounts) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    Graph g = oracle::random_graph(rng, 3 + t % 25, 0.1 + 0.0016 * t);
    auto p = char_poly(g, MatrixKind::A);
    const int n = g.order();
    ASSERT_EQ(p.degree(), n);
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(p.coeff(n - 1), 0);
    EXPECT_EQ(p.coeff(n - 2), -static_cast<long>(g.size()));
    EXPECT_EQ(p.coeff(n - 3), Rational(-2 * static_cast<long>(triangle_count(g))));
  }
}

TEST(CharPoly, PowerSumsCountClosedWalks) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    Graph g = oracle::random_graph(rng, 2 + t % 14);
    auto s = power_sums(char_poly(g, MatrixKind::A), 4);
    EXPECT_EQ(s[1], 2 * static_cast<long>(g.size()));
    EXPECT_EQ(s[2], Rational(6 * static_cast<long>(triangle_count(g))));
    EXPECT_EQ(s[3], Rational(static_cast<long>(oracle::closed_walks(g, 4))));
  }
}

TEST(CharPoly, LaplacianAndSignlessAreNonNegative) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 12);
    for (MatrixKind k : {MatrixKind::L, MatrixKind::Q}) EXPECT_EQ(root_signature(char_poly(g, k)).negatives, 0);
    auto nl = real_roots(char_poly(g, MatrixKind::NL));
    for (double r : nl) {
      EXPECT_GE(r, -1e-9);
      EXPECT_LE(r, 2 + 1e-9);
    }
    // trace of D^+(D - A) is the number of non-isolated vertices
    auto p = char_poly(g, MatrixKind::NL);
    EXPECT_EQ(-p.coeff(g.order() - 1), g.order() - structure_report(g).isolated);
  }
}

TEST(CharPoly, BipartiteSpectrumIsSymmetric) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_graphs(n)) {
      auto p = char_poly(g, MatrixKind::A);
      const bool symmetric = p == (n % 2 ? -reflect(p) : reflect(p));
      if (is_bipartite(g)) {
        EXPECT_TRUE(symmetric) << emit_graph6(g);
        EXPECT_EQ(char_poly(g, MatrixKind::L), char_poly(g, MatrixKind::Q));
      }
    }
}

TEST(CharPoly, IncidenceFactorizations) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 11);
    const IntMatrix q = integer_matrix(g, MatrixKind::Q), l = integer_matrix(g, MatrixKind::L);
    for (int o = 0; o < 3; ++o) {
      std::vector<bool> flip(g.size());
      for (std::size_t j = 0; j < flip.size(); ++j) flip[j] = rng() & 1;
      auto inc = incidence_matrices(g, flip);
      EXPECT_EQ(IntMatrix(inc.unoriented * inc.unoriented.transpose()), q);
      EXPECT_EQ(IntMatrix(inc.oriented * inc.oriented.transpose()), l);
    }
  }
}

TEST(CharPoly, LineGraphEigenvaluesAtLeastMinusTwo) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(rng, 2 + t % 9);
    if (g.size() == 0) continue;
    for (double r : real_roots(char_poly(line_graph(g), MatrixKind::A))) EXPECT_GE(r, -2 - 1e-9);
  }
}

TEST(CharPoly, ComplementKindsUseTheComplement) {
  Graph c5 = C(5);
  EXPECT_EQ(char_poly(c5, MatrixKind::cA), char_poly(complement(c5), MatrixKind::A));
  EXPECT_EQ(char_poly(K(4), MatrixKind::cL), from_roots({{0, 4}}));
}

TEST(CharPoly, MultimodularAgreesWithExactRationalPath) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 3; ++t) {
    Graph g = oracle::random_graph(rng, 25 + 3 * t, 0.5);
    for (MatrixKind k : {MatrixKind::A, MatrixKind::Q}) {
      const IntMatrix m = integer_matrix(g, k);
      RationalMatrix r = m.cast<Rational>();
      EXPECT_EQ(char_poly(m), Polynomial(faddeev_leverrier(r)));
    }
  }
}

TEST(CharPoly, CofactorReferenceAgrees) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 7);
    EXPECT_EQ(char_poly_by_cofactors(matrix_of(g, MatrixKind::NL)), char_poly(g, MatrixKind::NL));
  }
}

TEST(Polynomials, PowerSumExamples) {
  // x^2 - 3x + 2 has roots 1, 2
  auto s = power_sums(poly({2, -3, 1}), 3);
  EXPECT_EQ(s, (std::vector<Rational>{3, 5, 9}));
  EXPECT_EQ(power_sums(S(5).order() ? char_poly(S(5), MatrixKind::A) : Polynomial(), 2)[1], 8);
}

TEST(Polynomials, MultiplicityAndDistinctRoots) {
  auto p = from_roots({{0, 3}, {2, 2}, {-1, 1}});
  EXPECT_EQ(root_multiplicity(p, 0), 3);
  EXPECT_EQ(root_multiplicity(p, 2), 2);
  EXPECT_EQ(root_multiplicity(p, 5), 0);
  EXPECT_EQ(distinct_root_count(p), 3);
  EXPECT_EQ(distinct_root_count(char_poly(generate(family::Petersen{}), MatrixKind::A)), 3);
  EXPECT_EQ(root_signature(p), (RootSignature{1, 3, 2}));
}

TEST(Polynomials, SquareFreeDecomposition) {
  auto p = from_roots({{1, 1}, {2, 2}, {3, 2}, {0, 3}});
  auto f = square_free_decomposition(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], from_roots({{1, 1}}));
  EXPECT_EQ(f[1], from_roots({{2, 1}, {3, 1}}));
  EXPECT_EQ(f[2], from_roots({{0, 1}}));
}

TEST(NumericSpectrum, Examples) {
  auto s = numeric_spectrum(S(5), MatrixKind::A);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_NEAR(s.front(), 2, 1e-9);
  EXPECT_NEAR(s.back(), -2, 1e-9);
  auto k4 = numeric_spectrum(K(4), MatrixKind::L);
  EXPECT_NEAR(k4.front(), 4, 1e-9);
  EXPECT_NEAR(k4.back(), 0, 1e-9);
}

TEST(NumericSpectrum, MatchesExactRoots) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 2 + t % 12);
    for (MatrixKind k : {MatrixKind::A, MatrixKind::L, MatrixKind::NL}) {
      auto a = numeric_spectrum(g, k);
      auto b = real_roots(char_poly(g, k));
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-6);
    }
  }
}

TEST(Kinds, ParseAndName) {
  EXPECT_EQ(parse_kinds("Q,A,A"), (std::vector<MatrixKind>{MatrixKind::A, MatrixKind::Q}));
  EXPECT_EQ(kind_name(MatrixKind::cNL), "cNL");
  EXPECT_THROW(parse_kind("B"), PreconditionError);
  EXPECT_EQ(all_kinds().size(), 8u);
}

TEST(Fingerprint, KeyIsIsomorphismInvariant) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 2 + t % 10);
    auto kinds = all_kinds();
    EXPECT_EQ(fingerprint_key(fingerprint(g, kinds)), fingerprint_key(fingerprint(oracle::shuffled(g, rng), kinds)));
  }
}
