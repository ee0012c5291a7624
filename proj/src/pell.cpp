#include "pellstairs/pell.hpp"

#include "pellstairs/weights.hpp"

#include <stdexcept>

namespace pellstairs {

PellPair pell(long n) {
  if (n < 0) throw std::domain_error("pell index must be >= 0");
  Integer p0 = 0, p1 = 1, h0 = 1, h1 = 1;
  if (n == 0) return {0, p0, h0};
  for (long i = 1; i < n; ++i) {
    Integer p2 = 2 * p1 + p0, h2 = 2 * h1 + h0;
    p0 = p1; p1 = p2;
    h0 = h1; h1 = h2;
  }
  return {n, p1, h1};
}

Integer pell_P(long n) { return pell(n).P; }
Integer pell_H(long n) { return pell(n).H; }

Rational alpha(long n) {
  if (n % 2 == 0) {
    Integer p = pell_P(n + 1), h = pell_H(n);
    return Rational(2 * p * p, h * h);
  }
  Integer h = pell_H(n + 1), p = pell_P(n);
  return Rational(h * h, 2 * p * p);
}

Rational beta(long n) {
  if (n % 2 == 0) return Rational(pell_H(n + 2), pell_H(n));
  return Rational(pell_P(n + 2), pell_P(n));
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// 5; {1,4}^reps
std::vector<long> staircase_prefix(long reps) {
  std::vector<long> t{5};
  for (long i = 0; i < reps; ++i) {
    t.push_back(1);
    t.push_back(4);
  }
  return t;
}

Rational u_value(long k, long j) {
  Rational jj(j);
  return (jj * Rational(pell_P(2 * k + 4)) + Rational(pell_P(2 * k + 2))) /
         (jj * Rational(pell_P(2 * k + 2)) + Rational(pell_P(2 * k)));
}

Rational v_value(long k, long j) {
  Rational half_j = Rational(j) / Rational(2);
  return (half_j * Rational(pell_P(2 * k + 2)) + Rational(pell_P(2 * k + 1))) /
         (half_j * Rational(pell_P(2 * k)) + Rational(pell_P(2 * k - 1)));
}

}  // namespace

std::vector<long> stair_point_cf(StairKind kind, long first, long second) {
  switch (kind) {
    case StairKind::alpha:
    case StairKind::beta: {
      require(first >= 0, "index must be >= 0");
      Rational v = kind == StairKind::alpha ? alpha(first) : beta(first);
      return continued_fraction(v).terms;
    }
    case StairKind::c: {
      require(first >= 1, "c_n needs n >= 1");
      if (first % 2 == 1) {
        auto t = staircase_prefix((first + 1) / 2 - 1);
        t.push_back(1);
        return t;
      }
      return staircase_prefix(first / 2);
    }
    case StairKind::u: {
      require(first >= 1 && second >= 1, "u_k(j) needs k >= 1, j >= 1");
      auto t = staircase_prefix(first - 1);
      t.insert(t.end(), {1, 5, second});
      return t;
    }
    case StairKind::v: {
      require(first >= 1 && second >= 1, "v_k(j) needs k >= 1, j >= 1");
      auto t = staircase_prefix(first - 1);
      t.insert(t.end(), {1, second});
      return t;
    }
    case StairKind::b:
      require(first >= 1 && second >= 0, "b_k(i) needs k >= 1, i >= 0");
      return stair_point_cf(StairKind::v, first, 2 + 2 * second);
  }
  throw std::invalid_argument("unknown stair point kind");
}

StairPoint stair_point(StairKind kind, long first, long second) {
  StairPoint s{kind, first, second, Rational(0)};
  switch (kind) {
    case StairKind::alpha:
      require(first >= 0, "index must be >= 0");
      s.value = alpha(first);
      break;
    case StairKind::beta:
      require(first >= 0, "index must be >= 0");
      s.value = beta(first);
      break;
    case StairKind::c: {
      require(first >= 1, "c_n needs n >= 1");
      if (first % 2 == 1) {
        long k = (first + 1) / 2;
        s.value = Rational(pell_P(2 * k + 2), pell_P(2 * k));
      } else {
        long k = first / 2;
        s.value = Rational(pell_P(2 * k + 3), pell_P(2 * k + 1));
      }
      break;
    }
    case StairKind::u:
      require(first >= 1 && second >= 1, "u_k(j) needs k >= 1, j >= 1");
      s.value = u_value(first, second);
      break;
    case StairKind::v:
      require(first >= 1 && second >= 1, "v_k(j) needs k >= 1, j >= 1");
      s.value = v_value(first, second);
      break;
    case StairKind::b:
      require(first >= 1 && second >= 0, "b_k(i) needs k >= 1, i >= 0");
      s.value = v_value(first, 2 + 2 * second);
      break;
  }
  return s;
}

namespace {

// q * w(a) as integers, block by block.
std::vector<std::pair<long long, long>> scaled_blocks(const Rational& a) {
  auto w = weight_expansion(a);
  std::vector<std::pair<long long, long>> out;
  for (const auto& b : w.blocks) {
    Rational v = b.value * Rational(a.den());
    if (!v.is_integer() || !v.num().fits_slong_p()) throw std::overflow_error("scaled weight too large");
    out.emplace_back(v.num().get_si(), b.multiplicity);
  }
  return out;
}

std::vector<long long> expand(const std::vector<std::pair<long long, long>>& blocks) {
  std::vector<long long> m;
  for (auto [v, k] : blocks) m.insert(m.end(), static_cast<std::size_t>(k), v);
  return m;
}

}  // namespace

ExClass class_E_alpha(long n) {
  require(n >= 0, "index must be >= 0");
  Rational a = alpha(n);
  auto m = expand(scaled_blocks(a));
  m.push_back(1);
  Integer d = n % 2 == 0 ? pell_P(n + 1) * pell_H(n) : pell_P(n) * pell_H(n + 1);
  return make_class(Rational(d), Rational(d), std::move(m));
}

ExClass class_E_beta(long n) {
  require(n >= 0, "index must be >= 0");
  Rational b = beta(n);
  auto m = expand(scaled_blocks(b));
  if (n % 2 == 0) {
    Rational d = Rational(pell_H(n) + pell_H(n + 2)) / Rational(4);
    return make_class(d, d, std::move(m));
  }
  Rational mid = Rational(pell_P(n) + pell_P(n + 2)) / Rational(4);
  Rational half(Integer(1), Integer(2));
  return make_class(mid + half, mid - half, std::move(m));
}

ExClass class_E_b(long k, long i) {
  require(k >= 1 && i >= 0, "b_k(i) needs k >= 1, i >= 0");
  Rational b = stair_point(StairKind::b, k, i).value;
  auto blocks = scaled_blocks(b);
  long j = i / 2;
  long expected = i % 2 == 0 ? 4 * j + 2 : 4 * j + 4;
  if (blocks.back().first != 1 || blocks.back().second != expected)
    throw std::logic_error("unexpected last block for b_k(i)");
  blocks.pop_back();
  auto m = expand(blocks);
  Rational mid = Rational(b.num() + b.den()) / Rational(4);
  if (i % 2 == 0) {
    m.push_back(j + 1);
    if (j > 0) m.push_back(j);
    m.insert(m.end(), static_cast<std::size_t>(2 * j + 1), 1);
    return make_class(mid, mid, std::move(m));
  }
  m.insert(m.end(), 2, j + 1);
  m.insert(m.end(), static_cast<std::size_t>(2 * j + 2), 1);
  Rational half(Integer(1), Integer(2));
  return make_class(mid + half, mid - half, std::move(m));
}

}  // namespace pellstairs
