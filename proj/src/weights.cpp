#include "pellstairs/weights.hpp"

#include <stdexcept>

namespace pellstairs {

namespace {

void require_at_least_one(const Rational& a) {
  if (a < Rational(1)) throw std::domain_error("expected a >= 1, got " + a.str());
}

}  // namespace

Rational evaluate_cf(const std::vector<long>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty continued fraction");
  Rational v(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) v = Rational(*it) + v.inverse();
  return v;
}

Rational ContinuedFraction::value() const { return evaluate_cf(terms); }

ContinuedFraction continued_fraction(const Rational& a) {
  require_at_least_one(a);
  ContinuedFraction cf;
  Integer p = a.num(), q = a.den();
  while (q != 0) {
    Integer t = p / q;
    if (!t.fits_slong_p()) throw std::overflow_error("continued fraction term too large");
    cf.terms.push_back(t.get_si());
    Integer r = p - t * q;
    p = q;
    q = r;
  }
  return cf;
}

WeightExpansion weight_expansion(const Rational& a) {
  auto cf = continued_fraction(a);
  WeightExpansion w;
  w.source = a;
  // Block values: x0 = 1, x1 = a - l0, x_i = x_{i-2} - l_{i-1} x_{i-1}.
  Rational prev(1), cur = a - Rational(cf.terms[0]);
  w.blocks.push_back({prev, cf.terms[0]});
  for (std::size_t i = 1; i < cf.terms.size(); ++i) {
    w.blocks.push_back({cur, cf.terms[i]});
    Rational next = prev - Rational(cf.terms[i]) * cur;
    prev = cur;
    cur = next;
  }
  for (const auto& b : w.blocks)
    for (long j = 0; j < b.multiplicity; ++j) w.entries.push_back(b.value);
  return w;
}

long weight_length(const Rational& a) {
  long n = 0;
  for (long t : continued_fraction(a).terms) n += t;
  return n;
}

}  // namespace pellstairs
