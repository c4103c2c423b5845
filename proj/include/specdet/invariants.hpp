#pragma once

#include <optional>
#include <string>
#include <utility>

#include "specdet/closed_spectrum.hpp"
#include "specdet/polynomial.hpp"

namespace specdet {

// Everything here reads characteristic polynomials only, never the graph.

long long edges_from_spectrum(const CharPoly& pA);
long long triangles_from_spectrum(const CharPoly& pA);
Integer closed_walks_from_spectrum(const CharPoly& pA, int length);
std::optional<int> is_regular_from_spectrum(const CharPoly& pA, int n);
bool is_bipartite_from_A(const CharPoly& pA);

long long edges_from_laplacian(const CharPoly& pLorQ);  // trace / 2
int components_from_L(const CharPoly& pL);
int bipartite_components_from_Q(const CharPoly& pQ);
Integer spanning_trees(const CharPoly& pL, int n);
bool bipartite_from_L_and_Q(const CharPoly& pL, const CharPoly& pQ);

// Normalized Laplacian: isolated vertices give zero rows, so they show up as
// n - trace and count among the zero eigenvalues.
int isolated_from_NL(const CharPoly& pNL);
int components_from_NL(const CharPoly& pNL);
int bipartite_components_from_NL(const CharPoly& pNL);  // isolated vertices included

struct SrgParams {
  int n = 0, d = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

struct SrgSpectrum {
  int d = 0;
  QuadraticNumber p1, p2;  // p1 > p2
  int m1 = 0, m2 = 0;
  ClosedSpectrum closed() const;
};

bool srg_feasible(const SrgParams& p);
SrgSpectrum srg_spectrum(const SrgParams& params);
std::optional<std::pair<SrgParams, SrgSpectrum>> detect_srg(const CharPoly& pA, int n);
QuadraticNumber lovasz_theta_srg(const SrgParams& params);
std::pair<int, int> srg_girth_diameter(const SrgParams& params);  // (girth, diameter)

std::string srg_to_string(const SrgParams& p);

}  // namespace specdet
