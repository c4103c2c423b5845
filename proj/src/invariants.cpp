#include "specdet/invariants.hpp"

#include "specdet/error.hpp"

namespace specdet {
namespace {

Integer as_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw std::domain_error(std::string(what) + ": non-integral value " + r.get_str());
  return r.get_num();
}

long long as_long(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::domain_error(std::string(what) + ": value out of range");
  return z.get_si();
}

}  // namespace

long long edges_from_spectrum(const CharPoly& pA) {
  if (pA.degree() < 2) return 0;
  return as_long(as_integer(power_sums(pA, 2)[1] / 2, "edge count"), "edge count");
}

long long triangles_from_spectrum(const CharPoly& pA) {
  if (pA.degree() < 3) return 0;
  return as_long(as_integer(power_sums(pA, 3)[2] / 6, "triangle count"), "triangle count");
}

Integer closed_walks_from_spectrum(const CharPoly& pA, int length) {
  require(length >= 1, "walk length must be positive");
  return as_integer(power_sums(pA, length)[length - 1], "closed walk count");
}

std::optional<int> is_regular_from_spectrum(const CharPoly& pA, int n) {
  require(n >= 1 && pA.degree() == n, "polynomial degree must equal n");
  const Rational p2 = power_sums(pA, 2)[1];
  const Rational d = p2 / n;
  if (d.get_den() != 1) return std::nullopt;
  if (root_multiplicity(pA, d) == 0) return std::nullopt;
  if (sign_variations(taylor_shift(pA, d)) != 0) return std::nullopt;
  return static_cast<int>(d.get_num().get_si());
}

bool is_bipartite_from_A(const CharPoly& pA) {
  const Polynomial r = reflect(pA);
  return pA.degree() % 2 == 0 ? r == pA : r == -pA;
}

long long edges_from_laplacian(const CharPoly& p) {
  const int n = p.degree();
  if (n < 1) return 0;
  return as_long(as_integer(-p.coeff(n - 1) / 2, "edge count"), "edge count");
}

int components_from_L(const CharPoly& pL) { return root_multiplicity(pL, 0); }

int bipartite_components_from_Q(const CharPoly& pQ) { return root_multiplicity(pQ, 0); }

Integer spanning_trees(const CharPoly& pL, int n) {
  require(n >= 1 && pL.degree() == n, "polynomial degree must equal n");
  require(components_from_L(pL) == 1, "spanning trees need a connected graph");
  if (n == 1) return 1;
  return as_integer(abs(pL.coeff(1)) / n, "spanning tree count");
}

bool bipartite_from_L_and_Q(const CharPoly& pL, const CharPoly& pQ) { return pL == pQ; }

int isolated_from_NL(const CharPoly& p) {
  const int n = p.degree();
  if (n < 1) return 0;
  return static_cast<int>(as_long(as_integer(n + p.coeff(n - 1), "isolated count"), "isolated count"));
}

int components_from_NL(const CharPoly& p) { return root_multiplicity(p, 0); }

int bipartite_components_from_NL(const CharPoly& p) { return root_multiplicity(p, 2) + isolated_from_NL(p); }

bool srg_feasible(const SrgParams& p) {
  if (p.n < 3 || p.d <= 0 || p.d >= p.n - 1 || p.lambda < 0 || p.mu < 0) return false;
  return static_cast<long long>(p.n - p.d - 1) * p.mu == static_cast<long long>(p.d) * (p.d - p.lambda - 1);
}

std::string srg_to_string(const SrgParams& p) {
  return "srg(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

ClosedSpectrum SrgSpectrum::closed() const {
  return ClosedSpectrum({{QuadraticNumber(d), 1}, {p1, m1}, {p2, m2}});
}

SrgSpectrum srg_spectrum(const SrgParams& params) {
  require(srg_feasible(params), "infeasible strongly regular parameters " + srg_to_string(params));
  const auto [n, d, lambda, mu] = params;
  const long diff = lambda - mu;
  const long disc = diff * diff + 4L * (d - mu);
  const QuadraticNumber root = QuadraticNumber::sqrt_of(Rational(disc));
  SrgSpectrum s;
  s.d = d;
  s.p1 = (QuadraticNumber(Rational(diff)) + root) / QuadraticNumber(2);
  s.p2 = (QuadraticNumber(Rational(diff)) - root) / QuadraticNumber(2);
  const long num = 2L * d + static_cast<long>(n - 1) * diff;
  if (num == 0) {
    require((n - 1) % 2 == 0, "conference parameters need odd n");
    s.m1 = s.m2 = (n - 1) / 2;
  } else {
    require(root.is_rational(), "non-integral multiplicities for " + srg_to_string(params));
    const Rational sq = root.a();
    const Rational m1 = (Rational(n - 1) - Rational(num) / sq) / 2;
    const Rational m2 = (Rational(n - 1) + Rational(num) / sq) / 2;
    require(m1.get_den() == 1 && m2.get_den() == 1 && m1 >= 0 && m2 >= 0,
            "non-integral multiplicities for " + srg_to_string(params));
    s.m1 = static_cast<int>(m1.get_num().get_si());
    s.m2 = static_cast<int>(m2.get_num().get_si());
  }
  const QuadraticNumber tr1 = QuadraticNumber(d) + s.p1 * QuadraticNumber(s.m1) + s.p2 * QuadraticNumber(s.m2);
  const QuadraticNumber tr2 = QuadraticNumber(static_cast<long>(d) * d) + s.p1 * s.p1 * QuadraticNumber(s.m1) +
                              s.p2 * s.p2 * QuadraticNumber(s.m2);
  if (!(tr1 == QuadraticNumber(0)) || !(tr2 == QuadraticNumber(static_cast<long>(n) * d)) || 1 + s.m1 + s.m2 != n)
    throw std::logic_error("strongly regular spectrum fails the trace identities");
  return s;
}

std::optional<std::pair<SrgParams, SrgSpectrum>> detect_srg(const CharPoly& pA, int n) {
  if (n < 3 || pA.degree() != n) return std::nullopt;
  const auto d = is_regular_from_spectrum(pA, n);
  if (!d || *d == 0 || *d >= n - 1) return std::nullopt;
  if (root_multiplicity(pA, *d) != 1) return std::nullopt;
  if (distinct_root_count(pA) != 3) return std::nullopt;
  Polynomial q, r;
  divmod(pA, Polynomial::x_minus(*d), q, r);
  Polynomial kernel, rem;
  divmod(q, gcd(q, derivative(q)), kernel, rem);
  kernel = monic(kernel);
  if (kernel.degree() != 2) return std::nullopt;
  const Rational s = -kernel.coeff(1), t = kernel.coeff(0);
  const Rational lambda = Rational(*d) + s + t, mu = Rational(*d) + t;
  if (lambda.get_den() != 1 || mu.get_den() != 1 || lambda < 0 || mu < 0) return std::nullopt;
  SrgParams params{n, *d, static_cast<int>(lambda.get_num().get_si()), static_cast<int>(mu.get_num().get_si())};
  if (!srg_feasible(params)) return std::nullopt;
  SrgSpectrum spec;
  try {
    spec = srg_spectrum(params);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  if (spec.closed().to_char_poly() != pA) return std::nullopt;
  return std::make_pair(params, spec);
}

QuadraticNumber lovasz_theta_srg(const SrgParams& params) {
  require(params.mu > 0, "theta closed form needs a connected strongly regular graph (mu > 0)");
  const SrgSpectrum s = srg_spectrum(params);
  return (QuadraticNumber(-params.n) * s.p2) / (QuadraticNumber(params.d) - s.p2);
}

std::pair<int, int> srg_girth_diameter(const SrgParams& params) {
  require(srg_feasible(params), "infeasible strongly regular parameters " + srg_to_string(params));
  require(params.mu > 0, "girth rule needs a connected strongly regular graph (mu > 0)");
  if (params.lambda > 0) return {3, 2};
  return {params.mu >= 2 ? 4 : 5, 2};
}

}  // namespace specdet
