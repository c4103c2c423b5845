#pragma once

#include <string>
#include <vector>

#include "specdet/exact.hpp"

namespace specdet {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(const Rational& c);
  static Polynomial x_minus(const Rational& r);  // x - r
  static Polynomial monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  std::string to_string() const;                    // e.g. "x^5 - 4*x^3"
  std::vector<std::string> descending_strings() const;
  static Polynomial from_descending_strings(const std::vector<std::string>& coeffs);

 private:
  void trim();
  std::vector<Rational> c_;
};

using CharPoly = Polynomial;

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient, Polynomial& remainder);
Polynomial monic(const Polynomial& p);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic, gcd(0,0) = 0
Polynomial derivative(const Polynomial& p);
Polynomial power(const Polynomial& p, int e);
Polynomial taylor_shift(const Polynomial& p, const Rational& a);  // p(x + a)
Polynomial reflect(const Polynomial& p);                          // p(-x)

int sign_variations(const Polynomial& p);

struct RootSignature {
  int negatives = 0;
  int zeros = 0;
  int positives = 0;
  bool operator==(const RootSignature&) const = default;
};

// Exact for real-rooted polynomials; throws when the counts do not add up.
RootSignature root_signature(const Polynomial& p);

// Power sums of the roots, entries k = 1..upto.
std::vector<Rational> power_sums(const Polynomial& p, int upto);

int root_multiplicity(const Polynomial& p, const Rational& r);
int distinct_root_count(const Polynomial& p);

// Square-free factors f_1, f_2, ... with p = lc * prod f_i^i (f_i monic, possibly 1).
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

// Real roots with multiplicity, descending, to within `tolerance`.
std::vector<double> real_roots(const Polynomial& p, double tolerance = 1e-12);

}  // namespace specdet
