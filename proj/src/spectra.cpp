#include "specdet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>

#include "specdet/error.hpp"

namespace specdet {

std::string kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::Q: return "Q";
    case MatrixKind::NL: return "NL";
    case MatrixKind::cA: return "cA";
    case MatrixKind::cL: return "cL";
    case MatrixKind::cQ: return "cQ";
    case MatrixKind::cNL: return "cNL";
  }
  return "?";
}

MatrixKind parse_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (kind_name(k) == name) return k;
  throw PreconditionError("unknown matrix kind: " + std::string(name));
}

std::vector<MatrixKind> parse_kinds(std::string_view csv) {
  std::vector<MatrixKind> out;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const auto item = csv.substr(0, comma);
    if (!item.empty()) out.push_back(parse_kind(item));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  require(!out.empty(), "empty kind list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MatrixKind> all_kinds() { return {std::begin(kAllKinds), std::end(kAllKinds)}; }

bool is_complement_kind(MatrixKind k) { return static_cast<int>(k) >= 4; }

MatrixKind base_kind(MatrixKind k) { return static_cast<MatrixKind>(static_cast<int>(k) & 3); }

IntMatrix integer_matrix(const Graph& g0, MatrixKind kind) {
  const Graph g = is_complement_kind(kind) ? complement(g0) : g0;
  const MatrixKind base = base_kind(kind);
  require(base != MatrixKind::NL, "the normalized Laplacian has no integer form");
  const int n = g.order();
  IntMatrix m = IntMatrix::Zero(n, n);
  const long off = base == MatrixKind::L ? -1 : 1;
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = off;
  if (base != MatrixKind::A)
    for (int v = 0; v < n; ++v) m(v, v) = g.degree(v);
  return m;
}

RationalMatrix matrix_of(const Graph& g0, MatrixKind kind) {
  if (base_kind(kind) != MatrixKind::NL) return integer_matrix(g0, kind).cast<Rational>();
  const Graph g = is_complement_kind(kind) ? complement(g0) : g0;
  const int n = g.order();
  RationalMatrix m = RationalMatrix::Constant(n, n, Rational(0));
  for (int u = 0; u < n; ++u) {
    const int d = g.degree(u);
    if (d == 0) continue;
    m(u, u) = 1;
    for (int v : g.neighbors(u)) m(u, v) = Rational(-1, d);
  }
  return m;
}

Incidence incidence_matrices(const Graph& g, const std::vector<bool>& flip) {
  const auto es = g.edges();
  const int n = g.order(), m = static_cast<int>(es.size());
  require(flip.empty() || static_cast<int>(flip.size()) == m, "orientation vector size mismatch");
  Incidence inc{IntMatrix::Zero(n, m), IntMatrix::Zero(n, m)};
  for (int j = 0; j < m; ++j) {
    auto [u, v] = es[j];
    inc.unoriented(u, j) = inc.unoriented(v, j) = 1;
    const bool f = !flip.empty() && flip[j];
    inc.oriented(u, j) = f ? -1 : 1;
    inc.oriented(v, j) = f ? 1 : -1;
  }
  return inc;
}

namespace {

using i128 = __int128;

std::optional<std::vector<long long>> checked_faddeev_leverrier(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0), am(m.size(), 0);
  auto fits = [](i128 x) { return x >= INT64_MIN && x <= INT64_MAX; };
  for (int k = 1; k <= n; ++k) {
    // m <- a*m + c_{n-k+1} I, computed from the previous a*m product
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        i128 x = am[i * n + j];
        if (i == j) x += c[n - k + 1];
        if (!fits(x)) return std::nullopt;
        m[i * n + j] = static_cast<long long>(x);
      }
    i128 tr = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        i128 s = 0;
        for (int t = 0; t < n; ++t) {
          const long long aij = a(i, t);
          if (aij == 0) continue;
          s += static_cast<i128>(aij) * m[t * n + j];
          if (!fits(s)) return std::nullopt;
        }
        am[i * n + j] = static_cast<long long>(s);
        if (i == j) tr += s;
      }
    if (!fits(tr) || tr % k != 0) return std::nullopt;
    c[n - k] = static_cast<long long>(-tr / k);
  }
  return c;
}

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// Shared across threads; callers get their own copy of the prefix they need.
std::vector<u64> primes_below_2_31(std::size_t count) {
  static std::mutex guard;
  static std::vector<u64> primes;
  static u64 next = (u64{1} << 31) - 1;
  std::lock_guard lock(guard);
  while (primes.size() < count) {
    while (!is_prime(next)) --next;
    primes.push_back(next--);
  }
  return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<u64> char_poly_mod(const IntMatrix& a, u64 p) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long x = a(i, j) % static_cast<long long>(p);
      h[i][j] = static_cast<u64>(x < 0 ? x + static_cast<long long>(p) : x);
    }
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (int k = 0; k < n; ++k) std::swap(h[k][i], h[k][m]);
    }
    const u64 inv = pow_mod(h[m][m - 1], p - 2, p);
    for (int j = m + 1; j < n; ++j) {
      const u64 u = h[j][m - 1] * inv % p;
      if (!u) continue;
      const u64 neg = p - u;
      auto& row_j = h[j];
      const auto& row_m = h[m];
      for (int k = 0; k < n; ++k) row_j[k] = (row_j[k] + neg * row_m[k]) % p;
      for (int k = 0; k < n; ++k) h[k][m] = (h[k][m] + u * h[k][j]) % p;
    }
  }
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const u64 diag = h[m - 1][m - 1];
    for (int k = 0; k < m; ++k) {
      cur[k + 1] = (cur[k + 1] + poly[m - 1][k]) % p;
      cur[k] = (cur[k] + p - diag * poly[m - 1][k] % p) % p;
    }
    u64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % p;
      const u64 f = t * h[m - 1 - i][m - 1] % p;
      if (!f) continue;
      for (std::size_t k = 0; k < poly[m - 1 - i].size(); ++k)
        cur[k] = (cur[k] + p - f * poly[m - 1 - i][k] % p) % p;
    }
    poly[m] = std::move(cur);
  }
  return poly[n];
}

Polynomial multimodular_char_poly(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  // Schur: sum |lambda|^2 <= ||a||_F^2, so sum |lambda| <= sqrt(n ||a||_F^2), and
  // by Maclaurin |c_{n-j}| <= C(n,j) r^j <= (1 + r)^n with r = sqrt(||a||_F^2 / n).
  long double frob = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frob += static_cast<long double>(a(i, j)) * a(i, j);
  const long double r = std::sqrt(frob / n);
  const long double bits = n * std::log2(1 + r) + 2;
  const std::size_t count = static_cast<std::size_t>(std::ceil(bits / 30.0)) + 1;
  const auto primes = primes_below_2_31(count);
  std::vector<Integer> value(n + 1, 0);
  Integer modulus = 1;
  for (std::size_t t = 0; t < count; ++t) {
    const u64 p = primes[t];
    const auto r = char_poly_mod(a, p);
    const Integer mp = modulus % Integer(static_cast<unsigned long>(p));
    const u64 inv = pow_mod(mp.get_ui(), p - 2, p);
    for (int k = 0; k <= n; ++k) {
      const Integer cur = value[k] % Integer(static_cast<unsigned long>(p));
      const u64 have = cur.get_ui();
      const u64 delta = (r[k] + p - have) % p * inv % p;
      value[k] += modulus * Integer(static_cast<unsigned long>(delta));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  const Integer half = modulus / 2;
  std::vector<Rational> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[k] = Rational(value[k] > half ? Integer(value[k] - modulus) : value[k]);
  return Polynomial(std::move(coeffs));
}

Integer lcm_of_degrees(const Graph& g) {
  Integer l = 1;
  for (int d : g.degrees())
    if (d > 0) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(d));
  return l;
}

}  // namespace

Polynomial char_poly(const IntMatrix& m) {
  require(m.rows() == m.cols(), "characteristic polynomial of a non-square matrix");
  if (m.rows() <= 24) {
    if (auto c = checked_faddeev_leverrier(m)) {
      std::vector<Rational> q(c->size());
      for (std::size_t i = 0; i < c->size(); ++i) q[i] = Rational(Integer(static_cast<signed long>((*c)[i])));
      return Polynomial(std::move(q));
    }
  }
  return multimodular_char_poly(m);
}

Polynomial char_poly(const RationalMatrix& m) {
  require(m.rows() == m.cols(), "characteristic polynomial of a non-square matrix");
  return Polynomial(faddeev_leverrier(m));
}

CharPoly char_poly(const Graph& g0, MatrixKind kind) {
  if (base_kind(kind) != MatrixKind::NL) return char_poly(integer_matrix(g0, kind));
  const Graph g = is_complement_kind(kind) ? complement(g0) : g0;
  const int n = g.order();
  const Integer ell = lcm_of_degrees(g);
  require(ell.fits_slong_p() && ell < Integer(1L << 40), "degree lcm too large");
  const long l = ell.get_si();
  IntMatrix scaled = IntMatrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    const int d = g.degree(u);
    if (d == 0) continue;
    scaled(u, u) = l;
    for (int v : g.neighbors(u)) scaled(u, v) = -l / d;
  }
  const Polynomial pn = char_poly(scaled);
  std::vector<Rational> c(n + 1);
  Integer scale = 1;
  for (int k = n; k >= 0; --k) {
    c[k] = pn.coeff(k) / Rational(scale);
    scale *= ell;
  }
  return Polynomial(std::move(c));
}

Polynomial char_poly_by_cofactors(const RationalMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<Polynomial>> e(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[i][j] = i == j ? Polynomial({-m(i, j), 1}) : Polynomial::constant(-m(i, j));
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  std::function<Polynomial(int, std::vector<int>&)> det = [&](int row, std::vector<int>& rest) {
    if (rest.empty()) return Polynomial::constant(1);
    Polynomial acc;
    for (std::size_t t = 0; t < rest.size(); ++t) {
      const int col = rest[t];
      std::vector<int> sub = rest;
      sub.erase(sub.begin() + t);
      Polynomial term = e[row][col] * det(row + 1, sub);
      acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(0, cols);
}

SpectralFingerprint fingerprint(const Graph& g, const std::vector<MatrixKind>& kinds) {
  SpectralFingerprint fp;
  for (auto k : kinds) {
    if (fp.count(k)) continue;
    fp.emplace(k, char_poly(g, k));
  }
  return fp;
}

std::optional<MatrixKind> first_difference(const Graph& g, const Graph& h,
                                           const std::vector<MatrixKind>& kinds) {
  if (g.order() != h.order()) return kinds.empty() ? std::nullopt : std::optional(kinds.front());
  for (auto k : kinds)
    if (char_poly(g, k) != char_poly(h, k)) return k;
  return std::nullopt;
}

bool are_cospectral(const Graph& g, const Graph& h, const std::vector<MatrixKind>& kinds) {
  return g.order() == h.order() && !first_difference(g, h, kinds);
}

std::string fingerprint_key(const SpectralFingerprint& fp) {
  std::string key;
  for (const auto& [k, p] : fp) {
    key += kind_name(k);
    key += ':';
    for (const auto& c : p.coeffs()) {
      key += c.get_str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

std::vector<double> numeric_spectrum(const Graph& g, MatrixKind kind) {
  return real_roots(char_poly(g, kind));
}

}  // namespace specdet
