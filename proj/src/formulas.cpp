#include "specdet/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specdet/canonical.hpp"
#include "specdet/error.hpp"
#include "specdet/families.hpp"
#include "specdet/spectra.hpp"

namespace specdet {

ClosedSpectrum complete_bipartite_spectrum(int p, int q) {
  require(p >= 1 && q >= 1, "complete bipartite spectrum needs p, q >= 1");
  const QuadraticNumber r = QuadraticNumber::sqrt_of(Rational(static_cast<long>(p) * q));
  return ClosedSpectrum({{r, 1}, {QuadraticNumber(0), p + q - 2}, {-r, 1}});
}

ClosedSpectrum regular_multipartite_spectrum(int q, int k) {
  require(q >= 1 && k >= 1, "regular multipartite spectrum needs q, k >= 1");
  return ClosedSpectrum({{QuadraticNumber(-q), k - 1},
                         {QuadraticNumber(0), (q - 1) * k},
                         {QuadraticNumber(static_cast<long>(q) * (k - 1)), 1}});
}

ClosedSpectrum turan_spectrum(int n, int k) {
  require(k >= 2 && k <= n, "Turan spectrum needs 2 <= k <= n");
  const int q = n / k, s = n % k;
  if (s == 0) return regular_multipartite_spectrum(q, k);
  const long a = static_cast<long>(n) - 2L * (q + 1) * s + 1;
  const long disc = a * a + 4L * q * (q + 1) * s * (k - s);
  const QuadraticNumber centre(Rational(static_cast<long>(n) - 2L * q - 1, 2));
  const QuadraticNumber half_root = QuadraticNumber::sqrt_of(Rational(disc), Rational(1, 2));
  return ClosedSpectrum({{QuadraticNumber(-q - 1), s - 1},
                         {QuadraticNumber(-q), k - s - 1},
                         {QuadraticNumber(0), n - k},
                         {centre + half_root, 1},
                         {centre - half_root, 1}});
}

ClosedSpectrum join_spectrum_regular(const RegularSpectrum& g1, const RegularSpectrum& g2) {
  require(g1.spectrum.size() == g1.order && g2.spectrum.size() == g2.order,
          "declared order does not match the spectrum size");
  ClosedSpectrum s1 = g1.spectrum, s2 = g2.spectrum;
  s1.remove(QuadraticNumber(g1.degree));
  s2.remove(QuadraticNumber(g2.degree));
  const long r1 = g1.degree, r2 = g2.degree;
  const long disc = (r1 - r2) * (r1 - r2) + 4L * g1.order * g2.order;
  const QuadraticNumber centre(Rational(r1 + r2, 2));
  const QuadraticNumber half_root = QuadraticNumber::sqrt_of(Rational(disc), Rational(1, 2));
  ClosedSpectrum out = s1.merged(s2);
  out.add(centre + half_root);
  out.add(centre - half_root);
  return out;
}

namespace {

std::pair<int, int> best_factor_pair(int p, int q) {
  const long prod = static_cast<long>(p) * q;
  std::pair<int, int> best{1, static_cast<int>(prod)};
  for (long a = 1; a * a <= prod; ++a)
    if (prod % a == 0) best = {static_cast<int>(a), static_cast<int>(prod / a)};
  return best;  // the largest a <= sqrt(pq) minimises a + b
}

}  // namespace

bool is_am_minimizer(int p, int q) {
  require(p >= 1 && q >= 1, "AM-minimizer test needs p, q >= 1");
  auto [a, b] = best_factor_pair(p, q);
  return a + b == p + q;
}

bool complete_bipartite_is_ds(int p, int q) { return is_am_minimizer(p, q); }

std::optional<Graph> complete_bipartite_cospectral_mate(int p, int q) {
  require(p >= 1 && q >= 1, "cospectral mate needs p, q >= 1");
  if (is_am_minimizer(p, q)) return std::nullopt;
  auto [a, b] = best_factor_pair(p, q);
  const Graph mate = disjoint_union(generate(family::CompleteBipartite{a, b}), Graph(p + q - a - b));
  const Graph kpq = generate(family::CompleteBipartite{p, q});
  if (!are_cospectral(mate, kpq, {MatrixKind::A}) || are_isomorphic(mate, kpq))
    throw std::logic_error("complete bipartite mate failed verification");
  return mate;
}

bool multipartite_spectral_bounds_check(const std::vector<int>& parts0, const CharPoly& pA) {
  require(!parts0.empty(), "need at least one part");
  std::vector<int> parts = parts0;
  std::sort(parts.begin(), parts.end());
  const int k = static_cast<int>(parts.size());
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (pA.degree() != n) return false;
  const RootSignature sig = root_signature(pA);
  if (!(sig == RootSignature{k - 1, n - k, 1})) return false;
  auto roots = real_roots(pA);
  std::sort(roots.begin(), roots.end());
  std::vector<double> mags;
  for (int i = 0; i < k - 1; ++i) mags.push_back(-roots[i]);
  std::sort(mags.begin(), mags.end());
  const double tol = 1e-9;
  for (int i = 0; i < k - 1; ++i)
    if (mags[i] < parts[i] - tol || mags[i] > parts[i + 1] + tol) return false;
  return true;
}

}  // namespace specdet
