#include "pellstairs/ech.hpp"

#include <stdexcept>

namespace pellstairs {

namespace {

void require_positive(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw std::domain_error("ECH parameters must be positive");
}

void require_index(long k) {
  if (k < 1) throw std::domain_error("ECH index k must be >= 1");
}

long pair_count(long x) { return (x / 2) * ((x + 1) / 2); }

}  // namespace

EchSequence::EchSequence(Domain domain, const Rational& a, const Rational& b)
    : domain_(domain), a_(a), b_(b) {
  require_positive(a, b);
  if (domain_ == Domain::ellipsoid) frontier_.push({Rational(0), 0, 0});
}

void EchSequence::extend_to(long k) {
  while (static_cast<long>(values_.size()) < k) {
    if (domain_ == Domain::polydisc) {
      values_.push_back(ech_polydisc(a_, b_, static_cast<long>(values_.size()) + 1));
      continue;
    }
    // Each ray n = const is increasing in m; a ray is opened when its m = 0 node is popped.
    Node top = frontier_.top();
    frontier_.pop();
    values_.push_back(top.value);
    frontier_.push({top.value + a_, top.m + 1, top.n});
    if (top.m == 0) frontier_.push({top.value + b_, 0, top.n + 1});
  }
}

const Rational& EchSequence::at(long k) {
  require_index(k);
  extend_to(k);
  return values_[static_cast<std::size_t>(k - 1)];
}

Rational ech_ellipsoid(const Rational& a, const Rational& b, long k) {
  require_index(k);
  EchSequence s(Domain::ellipsoid, a, b);
  return s.at(k);
}

Rational ech_polydisc(const Rational& a, const Rational& b, long k) {
  require_positive(a, b);
  require_index(k);
  Rational best = Rational(k - 1) * a;  // n = 0, m = k - 1
  for (long m = 0; m < k; ++m) {
    Rational am = Rational(m) * a;
    if (am >= best) break;
    long n = (k + m) / (m + 1) - 1;  // least n with (m+1)(n+1) >= k
    Rational v = am + Rational(n) * b;
    if (v < best) best = v;
  }
  return best;
}

long cube_identity_d(long k) {
  require_index(k);
  long d = 0;
  while (!(pair_count(d + 1) < k && k <= pair_count(d + 2))) ++d;
  return d;
}

Dominance dominates(EchSequence& e1, EchSequence& e2, long k_max) {
  if (k_max < 1) throw std::domain_error("k_max must be >= 1");
  for (long k = 1; k <= k_max; ++k)
    if (e1.at(k) > e2.at(k)) return {false, k, k_max};
  return {true, std::nullopt, k_max};
}

}  // namespace pellstairs
