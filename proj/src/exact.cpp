#include "specdet/exact.hpp"

#include <cmath>

#include "specdet/error.hpp"

namespace specdet {

Integer square_free_part(const Integer& x, Integer* root) {
  Integer rest = abs(x), s = 1;
  if (rest == 0) {
    if (root) *root = 0;
    return 0;
  }
  for (Integer p = 2; p * p <= rest; ++p) {
    const Integer p2 = p * p;
    while (rest % p2 == 0) {
      rest /= p2;
      s *= p;
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
      rest = 1;
      break;
    }
  }
  if (root) *root = s;
  return x < 0 ? Integer(-rest) : rest;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
  require(delta_ >= 0, "quadratic number needs a non-negative radicand");
  normalize();
}

void QuadraticNumber::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && delta_ != 0) {
    Integer s;
    delta_ = square_free_part(delta_, &s);
    b_ *= s;
    if (delta_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  if (b_ == 0 || delta_ == 0) {
    b_ = 0;
    delta_ = 0;
  }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& radicand, const Rational& coefficient) {
  require(radicand >= 0, "square root of a negative number");
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer num = radicand.get_num() * radicand.get_den();
  return QuadraticNumber(0, coefficient / Rational(radicand.get_den()), num);
}

QuadraticNumber QuadraticNumber::conjugate() const { return QuadraticNumber(a_, -b_, delta_); }

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-a_, -b_, delta_); }

namespace {
Integer common_delta(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.delta();
  if (y.is_rational()) return x.delta();
  require(x.delta() == y.delta(), "quadratic numbers with different radicands");
  return x.delta();
}
}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, common_delta(x, y));
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, common_delta(x, y));
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Integer d = common_delta(x, y);
  const Rational dd(d);
  return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.delta_);
  require(norm != 0, "division by zero");
  QuadraticNumber t = x * y.conjugate();
  return QuadraticNumber(t.a_ / norm, t.b_ / norm, t.delta_);
}

int QuadraticNumber::sign() const {
  const int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs; compare squares.
  const int cmp_ = cmp(a_ * a_, b_ * b_ * Rational(delta_));
  if (cmp_ == 0) return 0;
  return cmp_ > 0 ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(delta_.get_d());
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s;
  if (a_ != 0) s = a_.get_str() + (b_ > 0 ? "+" : "-");
  else if (b_ < 0) s = "-";
  const Rational mag = abs(b_);
  if (mag != 1) s += mag.get_str() + "*";
  return s + "sqrt(" + delta_.get_str() + ")";
}

}  // namespace specdet
