#include "pellstairs/exactnum.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pellstairs {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  return Integer(std::string(s));
}

Rational parse_unsigned(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, whole));
  return Rational(parse_integer(s.substr(0, slash), whole), parse_integer(s.substr(slash + 1), whole));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  auto joint = s.find_first_of("+-");
  if (joint == std::string_view::npos) {
    out = parse_unsigned(s, text);
  } else {
    Rational whole = Rational(parse_integer(s.substr(0, joint), text));
    Rational frac = parse_unsigned(s.substr(joint + 1), text);
    if (frac.sign() < 0 || frac.num() >= frac.den())
      throw std::invalid_argument("malformed mixed number: '" + std::string(text) + "'");
    out = s[joint] == '+' ? whole + frac : whole - frac;
  }
  return negative ? -out : out;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::inverse() const {
  if (sign() == 0) throw std::domain_error("inverse of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(v_.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v_.get_den_mpz_t()) == 0)
    return std::nullopt;
  return Rational(isqrt(num()), isqrt(den()));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

QuadExt::QuadExt(const Rational& x, const Rational& y, const Rational& r) : x_(x), y_(y), r_(r) {
  if (r_.sign() < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadExt::normalize() {
  if (y_.sign() != 0) {
    if (auto s = r_.sqrt_exact()) {
      x_ += y_ * *s;
      y_ = 0;
    }
  }
  if (y_.sign() == 0) r_ = 0;
}

const Rational& QuadExt::rational() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + str());
  return x_;
}

std::optional<QuadExt> QuadExt::aligned(const QuadExt& o) const {
  if (is_rational() || o.is_rational() || r_ == o.r_) return o;
  auto k = (o.r_ / r_).sqrt_exact();
  if (!k) return std::nullopt;
  QuadExt out;
  out.x_ = o.x_;
  out.y_ = o.y_ * *k;
  out.r_ = r_;
  return out;
}

namespace {

QuadExt require_aligned(const QuadExt& a, const QuadExt& b) {
  auto o = a.aligned(b);
  if (!o) throw std::domain_error("mixed radicands " + a.radicand().str() + " and " + b.radicand().str());
  return *o;
}

}  // namespace

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  QuadExt b = require_aligned(*this, o);
  if (is_rational()) r_ = b.r_;
  x_ += b.x_;
  y_ += b.y_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  QuadExt b = require_aligned(*this, o);
  Rational r = is_rational() ? b.r_ : r_;
  Rational x = x_ * b.x_ + y_ * b.y_ * r;
  Rational y = x_ * b.y_ + y_ * b.x_;
  x_ = x;
  y_ = y;
  r_ = r;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational n = o.norm();
  if (n.sign() == 0) throw std::domain_error("division by zero");
  *this *= o.conjugate();
  x_ /= n;
  y_ /= n;
  normalize();
  return *this;
}

int QuadExt::sign() const {
  int sx = x_.sign();
  int sy = y_.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the larger square wins.
  Rational lhs = x_ * x_;
  Rational rhs = y_ * y_ * r_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

int QuadExt::compare(const QuadExt& a, const QuadExt& b) {
  if (a.aligned(b)) return (a - b).sign();
  // x + y1 sqrt(r1) + y2 sqrt(r2) with X = x + y1 sqrt(r1) and Y = y2 sqrt(r2).
  QuadExt X(a.x_ - b.x_, a.y_, a.r_);
  int sx = X.sign();
  int sy = -b.y_.sign();
  if (sx == 0 || sx == sy) return sy;
  QuadExt gap = X * X - QuadExt(b.y_ * b.y_ * b.r_);
  int sg = gap.sign();
  if (sg == 0) return 0;
  return sg > 0 ? sx : sy;
}

int quad_sign(const QuadExt& v) { return v.sign(); }

double QuadExt::to_double() const {
  mpf_class x(x_.raw(), 256), y(y_.raw(), 256), r(r_.raw(), 256);
  mpf_class v = x + y * ::sqrt(r);
  return v.get_d();
}

std::string QuadExt::decimal(int digits) const {
  mpf_class x(x_.raw(), 512), y(y_.raw(), 512), r(r_.raw(), 512);
  mpf_class v(x + y * ::sqrt(r), 512);
  std::ostringstream os;
  os << std::setprecision(digits) << std::showpoint << v;
  return os.str();
}

std::string QuadExt::str() const {
  if (is_rational()) return x_.str();
  if (x_.sign() == 0 && y_.sign() > 0) return "sqrt(" + (y_ * y_ * r_).str() + ")";
  std::string out = x_.sign() == 0 ? "" : x_.str() + (y_.sign() > 0 ? " + " : " - ");
  if (x_.sign() == 0 && y_.sign() < 0) out += "-";
  Rational ay = y_.abs();
  if (ay != 1) out += ay.str() + "*";
  return out + "sqrt(" + r_.str() + ")";
}

QuadExt QuadExt::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadExt(Rational::parse(s));
  if (s.back() != ')') throw std::invalid_argument("malformed quadratic value: '" + std::string(text) + "'");
  Rational r = Rational::parse(s.substr(pos + 5, s.size() - pos - 6));
  std::string head = s.substr(0, pos);
  Rational x;
  bool negative = false;
  auto k = head.find_last_of("+-");
  if (k != std::string::npos) {
    if (k > 0) x = Rational::parse(head.substr(0, k));
    negative = head[k] == '-';
    head = head.substr(k + 1);
  }
  Rational y(1);
  if (!head.empty()) {
    if (head.back() != '*') throw std::invalid_argument("malformed quadratic value: '" + std::string(text) + "'");
    y = Rational::parse(head.substr(0, head.size() - 1));
  }
  return QuadExt(x, negative ? -y : y, r);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

std::strong_ordering cmp_rational_vs_sqrt(const Rational& lhs, const Rational& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("negative radicand");
  if (lhs.sign() < 0) return std::strong_ordering::less;
  return lhs * lhs <=> radicand;
}

}  // namespace pellstairs
