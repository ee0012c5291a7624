#include "pellstairs/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pellstairs {

namespace {

const Rational kHalf(Integer(1), Integer(2));

void require_at_least_one(const Rational& a) {
  if (a < Rational(1)) throw std::domain_error("expected a >= 1, got " + a.str());
}

Rational integer_rational(long long x) { return Rational(Integer(static_cast<long>(x))); }

// a > sigma^2 = 3 + 2 sqrt 2 iff a > 3 and (a-3)^2 > 8.
bool above_sigma_squared(const Rational& a) {
  return a > Rational(3) && (a - Rational(3)) * (a - Rational(3)) > Rational(8);
}

// Largest integer t >= lo with pred(t), for a predicate true on an interval containing lo.
long largest_true(const std::function<bool(long)>& pred, long lo, long guess) {
  long t = std::max(lo, guess);
  while (t > lo && !pred(t)) --t;
  while (pred(t + 1)) ++t;
  return t;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("bound does not fit in a machine integer");
  return z.get_si();
}

long staircase_bound(const Rational& a) {
  if (!above_sigma_squared(a) || a > Rational(6))
    throw BoundUnavailable("staircase bound needs a in ]sigma^2, 6], got " + a.str());
  Rational disc = a * a - Rational(6) * a + Rational(1);
  Rational r_even = Rational(4) * a / disc;  // d^2 < r_even
  Rational r_odd = Rational(2) * a / disc;   // (d - 1/2)^2 < r_odd
  long d_even = largest_true([&](long d) { return Rational(d) * Rational(d) < r_even; }, 0,
                             to_long(isqrt(r_even.floor())));
  long d_odd = largest_true(
      [&](long d) {
        Rational t = Rational(d) - kHalf;
        return t * t < r_odd;
      },
      0, to_long(isqrt(r_odd.floor())));
  return std::max(d_even, d_odd);
}

long interval6_bound(const Rational& a) {
  if (!above_sigma_squared(a) || a >= Rational(8))
    throw BoundUnavailable("interval bound needs a in ]sigma^2, 8[, got " + a.str());
  Rational q(a.den());
  QuadExt delta = y_of(a) - QuadExt(q.inverse());
  if (delta.sign() <= 0) throw BoundUnavailable("interval bound needs y(a) > 1/q at " + a.str());
  // d <= sqrt(a/2)/delta (sqrt(q) - 1), with d - 1/2 for the (d+1/2, d-1/2) type.
  QuadExt g = delta / volume_bound(a);
  auto pred = [&](long d) {
    QuadExt t = QuadExt(Rational(d) - kHalf) * g + QuadExt(1);
    return t * t <= QuadExt(q);
  };
  double est = (std::sqrt(q.to_double()) - 1.0) / g.to_double() + 1.0;
  return largest_true(pred, 0, static_cast<long>(est));
}

long above7_bound(const Rational& a) {
  if (a >= Rational(8)) return 0;
  if (a < Rational(Integer(225), Integer(32)))
    throw BoundUnavailable("above-7 bound needs a in [225/32, 8], got " + a.str());
  return 13;
}

long error_vector_bound(const Rational& a) {
  // With s = d + e: sum eps = -(s K + 1), K = (y(a) - 1/q)/sqrt(2a), and |sum eps| < sqrt(M).
  // When sqrt(2a) is rational, <eps, w> lies in a lattice (1/L)Z and is at most 1/(2v), v = s/sqrt(2a).
  require_at_least_one(a);
  Rational q(a.den());
  long M = weight_length(a);
  Rational two_a = Rational(2) * a;
  std::optional<long> best;

  if (auto root = two_a.sqrt_exact()) {
    Rational step = *root / Rational(2);  // v a = s sqrt(2a) / 2
    Integer lcm;
    mpz_lcm(lcm.get_mpz_t(), a.den().get_mpz_t(), step.den().get_mpz_t());
    Rational s_max = Rational(lcm) * *root / Rational(2);
    best = to_long(s_max.floor());
  }

  QuadExt k = (y_of(a) - QuadExt(q.inverse())) / QuadExt::sqrt(two_a);
  if (k.sign() != 0) {
    auto pred = [&](long s) {
      QuadExt t = QuadExt(Rational(s)) * k + QuadExt(1);
      return t * t < QuadExt(Rational(M));
    };
    // The admissible s form an interval; its right end is found through the monotone half.
    auto upper = [&](long s) {
      QuadExt t = QuadExt(Rational(s)) * k + QuadExt(1);
      bool safe_side = k.sign() < 0 ? t.sign() >= 0 : t.sign() <= 0;
      return safe_side || t * t < QuadExt(Rational(M));
    };
    double est = (std::sqrt(static_cast<double>(M)) + (k.sign() < 0 ? 1.0 : -1.0)) / std::abs(k.to_double());
    long s = -1;
    if (upper(0)) {
      s = largest_true(upper, 0, static_cast<long>(est));
      if (!pred(s)) s = -1;
    }
    best = best ? std::min(*best, s) : s;
  }
  if (!best) throw BoundUnavailable("no error-vector bound at " + a.str());
  long s = std::max(*best, 0L);
  return (s + 1) / 2;
}

}  // namespace

QuadExt volume_bound(const Rational& a) { return QuadExt(0, kHalf, Rational(2) * a); }

QuadExt y_of(const Rational& a) { return QuadExt(a + Rational(1), Rational(-2), Rational(2) * a); }

Rational pairing(const std::vector<long long>& m, const WeightExpansion& w) {
  Rational s;
  std::size_t i = 0;
  for (const auto& b : w.blocks) {
    Integer block_sum = 0;
    for (long j = 0; j < b.multiplicity && i < m.size(); ++j, ++i) block_sum += static_cast<long>(m[i]);
    s += Rational(block_sum) * b.value;
    if (i >= m.size()) break;
  }
  return s;
}

Rational mu(const ExClass& cls, const WeightExpansion& w) {
  Rational de = cls.d + cls.e;
  if (de.sign() == 0) {
    if (cls.is_sentinel()) return Rational(0);
    throw std::domain_error("mu undefined for d + e = 0: " + cls.str());
  }
  return pairing(cls.m, w) / de;
}

Rational mu(const ExClass& cls, const Rational& a) {
  require_at_least_one(a);
  return mu(cls, weight_expansion(a));
}

bool is_obstructive(const ExClass& cls, const WeightExpansion& w) {
  Rational v = mu(cls, w);
  return v.sign() > 0 && v * v > w.source / Rational(2);
}

bool is_obstructive(const ExClass& cls, const Rational& a) {
  require_at_least_one(a);
  return is_obstructive(cls, weight_expansion(a));
}

Obstruction obstruction(const ExClass& cls, const Rational& a) {
  auto w = weight_expansion(a);
  Rational v = mu(cls, w);
  return {cls, a, v, volume_bound(a), v.sign() > 0 && v * v > a / Rational(2)};
}

ErrorStats error_stats(const ExClass& cls, const Rational& a) {
  require_at_least_one(a);
  auto w = weight_expansion(a);
  Rational two_a = Rational(2) * a;
  Rational s = cls.d + cls.e;
  QuadExt v(0, s / two_a, two_a);  // (d+e)/sqrt(2a)
  Rational sum_m, sum_m2;
  for (long long x : cls.m) {
    sum_m += integer_rational(x);
    sum_m2 += integer_rational(x) * integer_rational(x);
  }
  Rational sum_w;
  for (const auto& b : w.blocks) sum_w += b.value * Rational(b.multiplicity);
  Rational mw = pairing(cls.m, w);
  ErrorStats out{cls, a, QuadExt(), QuadExt(), QuadExt()};
  out.sum_eps = QuadExt(sum_m) - v * QuadExt(sum_w);
  out.sum_eps_sq = QuadExt(sum_m2) - QuadExt(2) * v * QuadExt(mw) + QuadExt(s * s / Rational(2));
  out.eps_dot_w = QuadExt(mw) - v * QuadExt(a);
  return out;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::staircase: return "staircase";
    case Regime::interval6: return "interval6";
    case Regime::above7: return "above7";
    case Regime::error_vector: return "error_vector";
  }
  return "?";
}

long d_upper_bound(const Rational& a, Regime regime) {
  require_at_least_one(a);
  switch (regime) {
    case Regime::staircase: return staircase_bound(a);
    case Regime::interval6: return interval6_bound(a);
    case Regime::above7: return above7_bound(a);
    case Regime::error_vector: return error_vector_bound(a);
  }
  throw std::invalid_argument("unknown regime");
}

long d_upper_bound(const Rational& a) {
  require_at_least_one(a);
  if (a >= Rational(8)) return 0;
  long best = error_vector_bound(a);
  for (Regime r : {Regime::interval6, Regime::above7}) {
    try {
      best = std::min(best, d_upper_bound(a, r));
    } catch (const BoundUnavailable&) {
    }
  }
  return best;
}

long interval_search_bound(long k, bool leading_block_equal) {
  if (k < 1 || k > 7) throw std::domain_error("interval index k must be in 1..7");
  const unsigned prec = 512;
  mpf_class right(6, prec), left(6, prec);
  right += mpf_class(1, prec) / k;
  left += mpf_class(1, prec) / (k + 1);
  mpf_class y_left = left + 1 - 2 * sqrt(mpf_class(2 * left, prec));
  mpf_class delta = y_left - mpf_class(1, prec) / 40;
  mpf_class c(0, prec);
  if (leading_block_equal) {
    c = mpf_class(7, prec) / 4;
  } else {
    c = (mpf_class(1, prec) / 6) / (1 - 1 / (2 * sqrt(mpf_class(3, prec))));
  }
  mpf_class bound = sqrt(mpf_class(right / 2, prec)) / delta * (c / delta - 1);
  mpf_class shifted(bound + mpf_class(0.5, prec), prec), fl(0, prec);
  mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
  return std::max(0L, to_long(Integer(fl)));
}

}  // namespace pellstairs
