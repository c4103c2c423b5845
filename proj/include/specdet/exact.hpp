#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace specdet {

using Integer = mpz_class;
using Rational = mpq_class;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<long>;

// a + b*sqrt(delta), delta square-free (or 0 when b = 0).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  QuadraticNumber(long a) : a_(a) {}    // NOLINT
  QuadraticNumber(int a) : a_(a) {}     // NOLINT
  QuadraticNumber(Rational a, Rational b, Integer delta);

  // coefficient * sqrt(radicand), square factors pulled out of the radicand.
  static QuadraticNumber sqrt_of(const Rational& radicand, const Rational& coefficient = 1);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& delta() const { return delta_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticNumber conjugate() const;
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  QuadraticNumber operator-() const;

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.delta_ == y.delta_;
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Integer delta_{0};
};

// Largest s with s*s dividing |x|; returns the square-free part of x.
Integer square_free_part(const Integer& x, Integer* square_root_of_factor = nullptr);

}  // namespace specdet

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
