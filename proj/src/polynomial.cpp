#include "specdet/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "specdet/error.hpp"

namespace specdet {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x_minus(const Rational& r) { return Polynomial({-r, 1}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) v[i] += q.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> v(p.c_.size() + q.c_.size() - 1, 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r = p;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    const bool show = mag != 1 || k == 0;
    if (show) s += mag.get_str();
    if (k > 0) {
      if (show) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::vector<std::string> Polynomial::descending_strings() const {
  std::vector<std::string> out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->get_str());
  return out;
}

Polynomial Polynomial::from_descending_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Rational r;
    if (r.set_str(*it, 10) != 0) throw ParseError("bad coefficient: " + *it);
    v.push_back(r);
  }
  return Polynomial(std::move(v));
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient, Polynomial& remainder) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Rational> q(std::max(dq + 1, 0), 0);
  for (int k = dq; k >= 0; --k) {
    const Rational t = r[k + db] / b.leading();
    q[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) r[k + i] -= t * b.coeffs()[i];
  }
  if (dq >= 0) r.resize(db);
  quotient = Polynomial(std::move(q));
  remainder = Polynomial(std::move(r));
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v[k - 1] = p.coeffs()[k] * k;
  return Polynomial(std::move(v));
}

Polynomial power(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial taylor_shift(const Polynomial& p, const Rational& a) {
  std::vector<Rational> c = p.coeffs();
  const int n = p.degree();
  for (int i = 0; i < n; ++i)
    for (int k = n - 1; k >= i; --k) c[k] += a * c[k + 1];
  return Polynomial(std::move(c));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(std::move(c));
}

int sign_variations(const Polynomial& p) {
  int changes = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RootSignature root_signature(const Polynomial& p) {
  require(p.is_monic(), "root signature needs a monic polynomial");
  RootSignature sig;
  while (p.coeffs()[sig.zeros] == 0) ++sig.zeros;
  sig.positives = sign_variations(p);
  sig.negatives = sign_variations(reflect(p));
  if (sig.negatives + sig.zeros + sig.positives != p.degree())
    throw std::logic_error("root signature: polynomial is not real-rooted");
  return sig;
}

std::vector<Rational> power_sums(const Polynomial& p, int upto) {
  require(upto >= 1, "power sums need upto >= 1");
  require(p.is_monic(), "power sums need a monic polynomial");
  const int n = p.degree();
  // x^n + a_1 x^{n-1} + ... + a_n
  auto a = [&](int i) -> Rational { return i <= n ? p.coeffs()[n - i] : Rational(0); };
  std::vector<Rational> s(upto + 1, 0);
  for (int k = 1; k <= upto; ++k) {
    Rational acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += a(i) * s[k - i];
    if (k <= n) acc += k * a(k);
    s[k] = -acc;
  }
  return {s.begin() + 1, s.end()};
}

int root_multiplicity(const Polynomial& p, const Rational& r) {
  require(!p.is_zero(), "multiplicity in the zero polynomial");
  int m = 0;
  Polynomial cur = p;
  const Polynomial lin = Polynomial::x_minus(r);
  while (cur.degree() >= 1) {
    Polynomial q, rem;
    divmod(cur, lin, q, rem);
    if (!rem.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

int distinct_root_count(const Polynomial& p) {
  require(!p.is_zero(), "distinct roots of the zero polynomial");
  return p.degree() - gcd(p, derivative(p)).degree();
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  require(p.degree() >= 0, "square-free decomposition of the zero polynomial");
  std::vector<Polynomial> out;
  if (p.degree() == 0) return out;
  Polynomial q, r;
  Polynomial a = gcd(p, derivative(p));
  Polynomial b, c, d;
  divmod(monic(p), a, b, r);
  divmod(derivative(monic(p)), a, c, r);
  d = c - derivative(b);
  while (b.degree() > 0) {
    Polynomial f = gcd(b, d);
    out.push_back(f);
    divmod(b, f, q, r);
    b = q;
    divmod(d, f, q, r);
    c = q;
    d = c - derivative(b);
  }
  return out;
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
  std::vector<Polynomial> seq{f, derivative(f)};
  while (seq.back().degree() > 0) {
    Polynomial q, r;
    divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) / abs(r.leading()) * r);
  }
  return seq;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double tolerance) {
  require(!p.is_zero(), "roots of the zero polynomial");
  std::vector<double> roots;
  const auto factors = square_free_decomposition(p);
  const Rational tol(tolerance);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Polynomial& f = factors[i];
    if (f.degree() < 1) continue;
    const int mult = static_cast<int>(i) + 1;
    Rational bound = 0;
    for (int k = 0; k < f.degree(); ++k) bound = std::max(bound, Rational(abs(f.coeffs()[k])));
    bound += 1;
    const auto seq = sturm_sequence(f);
    auto count = [&](const Rational& lo, const Rational& hi) {
      return variations_at(seq, lo) - variations_at(seq, hi);
    };
    std::function<void(Rational, Rational, int)> isolate = [&](Rational lo, Rational hi, int c) {
      if (c == 0) return;
      if (c == 1) {
        // f is square-free, so a lone root in (lo, hi] is a sign change
        // unless it sits exactly on hi
        if (f(hi) == 0) lo = hi;
        // a root exactly at lo belongs to the neighbouring interval; just to
        // its right f has the sign of f'
        int lo_sign = sgn(f(lo));
        if (lo_sign == 0) lo_sign = sgn(derivative(f)(lo));
        while (hi - lo > tol) {
          Rational mid = (lo + hi) / 2;
          const int s = sgn(f(mid));
          if (s == 0) {
            lo = hi = mid;
            break;
          }
          if (s == lo_sign) lo = mid;
          else hi = mid;
        }
        const double root = Rational((lo + hi) / 2).get_d();
        roots.insert(roots.end(), mult, root);
        return;
      }
      Rational mid = (lo + hi) / 2;
      const int left = count(lo, mid);
      isolate(lo, mid, left);
      isolate(mid, hi, c - left);
    };
    const Rational lo = -bound, hi = bound;
    isolate(lo, hi, count(lo, hi));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace specdet
