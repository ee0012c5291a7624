// Exact scalars: arbitrary-precision rationals and numbers x + y*sqrt(r).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace pellstairs {

using Integer = mpz_class;

// Fraction in lowest terms with positive denominator; backed by mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& n) : v_(mpz_class(n)) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  // Accepts "p/q", "n", "w+p/q" and "w-p/q" (mixed numbers), optional sign.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return Rational(::abs(v_)); }
  Rational inverse() const;
  // Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt_exact() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// x + y*sqrt(r). A value with y == 0 is pure rational and carries r == 0.
// Radicands whose ratio is a rational square are merged; arithmetic across genuinely
// different quadratic fields throws, comparison across them is exact.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(const Rational& x) : x_(x) {}
  QuadExt(long x) : x_(x) {}
  QuadExt(const Rational& x, const Rational& y, const Rational& r);

  static QuadExt sqrt(const Rational& r) { return QuadExt(0, 1, r); }
  // Inverse of str(): "p/q", "sqrt(r)", "x + y*sqrt(r)", "x - sqrt(r)".
  static QuadExt parse(std::string_view text);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& radicand() const { return r_; }
  bool is_rational() const { return y_.sign() == 0; }
  // Throws std::domain_error when the value is irrational.
  const Rational& rational() const;

  int sign() const;
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }
  QuadExt conjugate() const { return QuadExt(x_, -y_, r_); }
  // x^2 - y^2 r, the product with the conjugate.
  Rational norm() const { return x_ * x_ - y_ * y_ * r_; }
  double to_double() const;
  // Decimal rendering with the given number of significant digits.
  std::string decimal(int digits) const;
  // "p/q" for rationals, "sqrt(s)" for a lone root, else "x + y*sqrt(r)".
  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const { return QuadExt(-x_, -y_, r_); }

  // o rewritten over this radicand, if both lie in the same field.
  std::optional<QuadExt> aligned(const QuadExt& o) const;
  // Sign of a - b, also across different radicands.
  static int compare(const QuadExt& a, const QuadExt& b);

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
    int s = compare(a, b);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  void normalize();

  Rational x_, y_, r_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& v);

int quad_sign(const QuadExt& v);

// Orders lhs against sqrt(radicand) without leaving the rationals.
std::strong_ordering cmp_rational_vs_sqrt(const Rational& lhs, const Rational& radicand);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace pellstairs
