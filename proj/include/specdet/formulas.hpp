#pragma once

#include <optional>
#include <vector>

#include "specdet/closed_spectrum.hpp"
#include "specdet/graph.hpp"
#include "specdet/polynomial.hpp"

namespace specdet {

ClosedSpectrum complete_bipartite_spectrum(int p, int q);
ClosedSpectrum regular_multipartite_spectrum(int q, int k);  // k parts of size q
ClosedSpectrum turan_spectrum(int n, int k);

struct RegularSpectrum {
  ClosedSpectrum spectrum;
  int degree = 0;
  int order = 0;
};
// Adjacency spectrum of the join of two regular graphs.
ClosedSpectrum join_spectrum_regular(const RegularSpectrum& g1, const RegularSpectrum& g2);

bool is_am_minimizer(int p, int q);
bool complete_bipartite_is_ds(int p, int q);
// K_{a,b} plus isolated vertices, with a + b minimal among factor pairs of pq.
std::optional<Graph> complete_bipartite_cospectral_mate(int p, int q);

// One positive root, n-k zeros, k-1 negatives interlacing the sorted part sizes.
bool multipartite_spectral_bounds_check(const std::vector<int>& parts, const CharPoly& pA);

}  // namespace specdet
