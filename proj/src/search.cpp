#include "pellstairs/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace pellstairs {

namespace {

using i128 = __int128;

void solutions_rec(long long S, long long Q, long long cap, IntVec& prefix, std::vector<IntVec>& out) {
  if (S == 0 && Q == 0) {
    out.push_back(prefix);
    return;
  }
  if (S <= 0 || Q < S || Q > cap * S) return;
  i128 s2 = static_cast<i128>(S) * S;
  if (s2 < Q) return;
  if (s2 == Q) {
    if (S <= cap) {
      prefix.push_back(S);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  long long top = std::min<long long>(isqrt(Integer(static_cast<long>(Q))).get_si(), cap);
  for (long long i = top; i >= 1; --i) {
    prefix.push_back(i);
    solutions_rec(S - i, Q - i * i, i, prefix, out);
    prefix.pop_back();
  }
}

long long checked(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + " too large for the search");
  return z.get_si();
}

// Round half to even of sqrt(r), r >= 0.
Integer round_sqrt(const Rational& r) {
  Integer n = isqrt((r * Rational(4)).floor());  // floor(2 sqrt r)
  // sqrt(r) lies in [n/2, (n+1)/2); round(sqrt r) = floor(sqrt(r) + 1/2) = floor((n+1)/2) except at ties.
  Integer out = (n + 1) / 2;
  if (n % 2 == 1 && Rational(n * n, Integer(4)) == r && out % 2 == 1) out -= 1;
  return out;
}

Integer floor_sqrt(const Rational& r) { return isqrt(r.floor()); }

Integer ceil_sqrt(const Rational& r) {
  Integer f = isqrt(r.floor());
  return Rational(f * f) == r ? f : f + 1;
}

Rational rat(long long x) { return Rational(Integer(static_cast<long>(x))); }

Candidate make_candidate(long long d, long long e, IntVec m, long max_steps) {
  Candidate c{make_class(rat(d), rat(e), std::move(m)), {}};
  c.flags.diophantine_ok = diophantine_ok(c.cls);
  c.flags.reduces = is_in_E(c.cls, max_steps);
  return c;
}

void require_interval_index(long k) {
  if (k < 1 || k > 7) throw std::domain_error("interval index k must be in 1..7, got " + std::to_string(k));
}

void require_bound(long D) {
  if (D < 0) throw std::domain_error("search bound D must be >= 0");
}

void finish(SearchReport& r) {
  std::sort(r.candidates.begin(), r.candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.cls < y.cls; });
}

struct Block {
  long long scaled;  // q * w
  long long len;
};

// One (d, e) cell of the point search.
void sol_cell(const std::vector<Block>& blocks, long long p, long long q, long long d, long long e,
              const std::vector<std::vector<long long>>& offsets, std::set<IntVec>& seen,
              SearchReport& report, long max_steps) {
  const long long s = d + e;
  const long long want_sum = 2 * s - 1;
  const long long want_sq = 2 * d * e + 1;
  std::vector<long long> base(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    // floor(s * w / sqrt(2a)) = floor(sqrt((s * n)^2 / (2pq))) with n = q w
    Integer num = Integer(static_cast<long>(s)) * static_cast<long>(blocks[j].scaled);
    Integer two_pq_z = Integer(2) * static_cast<long>(p) * static_cast<long>(q);
    base[j] = isqrt(Integer(num * num / two_pq_z)).get_si();
  }
  std::vector<long long> suffix_len(blocks.size() + 1, 0);
  for (std::size_t j = blocks.size(); j-- > 0;) suffix_len[j] = suffix_len[j + 1] + blocks[j].len;
  long long base_sum = 0, base_sq = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    base_sum += base[j] * blocks[j].len;
    base_sq += base[j] * base[j] * blocks[j].len;
  }
  if (base_sum > want_sum || base_sum + suffix_len[0] < want_sum) return;

  std::vector<long long> choice(blocks.size());
  std::function<void(std::size_t, long long, long long)> dfs = [&](std::size_t j, long long sum, long long sq) {
    if (sum > want_sum || sum + suffix_len[j] < want_sum) return;
    if (j == blocks.size()) {
      if (sq != want_sq) return;
      IntVec v;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (long long i = 0; i < blocks[b].len; ++i) v.push_back(base[b] + (i < choice[b] ? 1 : 0));
      std::sort(v.begin(), v.end(), std::greater<>());
      if (v.back() <= 0 || seen.count(v)) return;
      i128 n = 0;
      std::size_t pos = 0;
      for (const auto& b : blocks)
        for (long long i = 0; i < b.len; ++i) n += static_cast<i128>(v[pos++]) * b.scaled;
      i128 lhs = 2 * n * n, rhs = static_cast<i128>(p) * q * s * s;
      bool boundary = n > 0 && lhs == rhs;
      bool strict = n > 0 && lhs > rhs;
      bool listed = d == e ? (strict || boundary) : strict;
      if (!listed) return;
      seen.insert(v);
      Candidate c = make_candidate(d, e, v, max_steps);
      c.flags.obstructive = strict;
      c.flags.boundary = boundary;
      report.candidates.push_back(std::move(c));
      return;
    }
    for (long long c : offsets[j]) {
      choice[j] = c;
      dfs(j + 1, sum + c, sq + c * (2 * base[j] + 1));
    }
  };
  dfs(0, base_sum, base_sq);
}

}  // namespace

std::vector<IntVec> solutions(long long S, long long Q, long long cap) {
  if (S < 0 || Q < 0) return {};
  std::vector<IntVec> out;
  IntVec prefix;
  solutions_rec(S, Q, cap, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> solutions(long long S, long long Q) {
  if (S < 0 || Q < 0) return {};
  long long cap = std::min<long long>(S, isqrt(Integer(static_cast<long>(Q))).get_si());
  return solutions(S, Q, cap);
}

std::vector<IntVec> perturbations(const ContinuedFraction& cf) {
  std::vector<IntVec> out{IntVec{}};
  for (long len : cf.terms) {
    std::vector<IntVec> block;
    IntVec t0(static_cast<std::size_t>(len), 0), t0p = t0, t1(static_cast<std::size_t>(len), 1), t1m = t1;
    if (len > 0) {
      t0p.front() = 1;
      t1m.back() = 0;
    }
    for (const auto& t : {t0, t0p, t1, t1m})
      if (std::find(block.begin(), block.end(), t) == block.end()) block.push_back(t);
    std::vector<IntVec> next;
    for (const auto& head : out)
      for (const auto& t : block) {
        IntVec v = head;
        v.insert(v.end(), t.begin(), t.end());
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<IntVec> interval_perturbations(long k) {
  require_interval_index(k);
  IntVec t0(static_cast<std::size_t>(6 + k), 0), tm = t0, tp = t0;
  tm.back() = -1;
  tp[6] = 1;
  return {tm, t0, tp};
}

const char* variant_name(SearchVariant v) {
  switch (v) {
    case SearchVariant::point: return "point";
    case SearchVariant::interval_equal: return "interval_equal";
    case SearchVariant::interval_unequal: return "interval_unequal";
  }
  return "?";
}

std::vector<ExClass> SearchReport::obstructive_classes() const {
  std::vector<ExClass> out;
  for (const auto& c : candidates)
    if (c.flags.diophantine_ok && c.flags.reduces && c.flags.obstructive.value_or(false)) out.push_back(c.cls);
  return out;
}

std::vector<ExClass> SearchReport::reduced_classes() const {
  std::vector<ExClass> out;
  for (const auto& c : candidates)
    if (c.flags.diophantine_ok && c.flags.reduces) out.push_back(c.cls);
  return out;
}

std::string SearchReport::to_json() const {
  using json = nlohmann::ordered_json;
  auto number = [](const Rational& x) -> json {
    if (x.is_integer() && x.num().fits_slong_p()) return x.num().get_si();
    return x.str();
  };
  json query;
  query["variant"] = variant_name(variant);
  query["a"] = a ? json(a->str()) : json(nullptr);
  query["k"] = k ? json(*k) : json(nullptr);
  query["D"] = D;
  json list = json::array();
  for (const auto& c : candidates) {
    json item;
    item["d"] = number(c.cls.d);
    item["e"] = number(c.cls.e);
    item["m"] = c.cls.m;
    json flags;
    flags["diophantine_ok"] = c.flags.diophantine_ok;
    flags["reduces"] = c.flags.reduces;
    flags["obstructive"] = c.flags.obstructive ? json(*c.flags.obstructive) : json(nullptr);
    flags["boundary"] = c.flags.boundary;
    item["flags"] = flags;
    list.push_back(item);
  }
  json out;
  out["query"] = query;
  out["candidates"] = list;
  return out.dump();
}

SearchReport sol_less(const Rational& a, long D, long max_steps) {
  if (a < Rational(1)) throw std::domain_error("sol_less needs a >= 1, got " + a.str());
  require_bound(D);
  SearchReport report;
  report.variant = SearchVariant::point;
  report.a = a;
  report.D = D;

  const long long p = checked(a.num(), "numerator"), q = checked(a.den(), "denominator");
  if (p > (1LL << 31) || D > (1L << 20)) throw std::overflow_error("point search out of machine range");
  auto cf = continued_fraction(a);
  auto w = weight_expansion(a);
  std::vector<Block> blocks;
  std::vector<std::vector<long long>> offsets;
  for (const auto& b : w.blocks) {
    blocks.push_back({checked((b.value * Rational(a.den())).num(), "weight"), b.multiplicity});
    std::vector<long long> o{0, 1, b.multiplicity, b.multiplicity - 1};
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    offsets.push_back(o);
  }

  for (long long d = 1; d <= D; ++d) {
    std::set<IntVec> seen_equal, seen_lower;
    sol_cell(blocks, p, q, d, d, offsets, seen_equal, report, max_steps);
    sol_cell(blocks, p, q, d, d - 1, offsets, seen_lower, report, max_steps);
  }
  finish(report);
  return report;
}

SearchReport inter_sol_less1(long k, long D, long max_steps) {
  require_interval_index(k);
  require_bound(D);
  SearchReport report;
  report.variant = SearchVariant::interval_equal;
  report.k = k;
  report.D = D;

  const Rational u = Rational(1) / Rational(k + 1), v = Rational(1) / Rational(k);
  const long long f = checked(ceil_sqrt(Rational(k + 2)), "f") - 1;
  const auto pp = interval_perturbations(k);
  const std::size_t head = static_cast<std::size_t>(6 + k);

  for (long long d = 1; d <= D; ++d) {
    Rational two_d2 = Rational(2) * rat(d) * rat(d);
    Rational r_right = two_d2 / (Rational(6) + v), r_left = two_d2 / (Rational(6) + u);
    long long m1 = checked(round_sqrt(r_right), "m1");
    long long big_m1 = checked(round_sqrt(r_left), "M1");
    long long mx = checked(floor_sqrt(r_right * u * u), "mx") - 1;
    long long big_mx = checked(ceil_sqrt(r_left * v * v), "Mx") + 1;

    for (int kind = 0; kind <= 1; ++kind) {
      std::set<IntVec> prelist;
      for (long long i = 0; i <= big_m1 - m1; ++i)
        for (long long j = 0; j <= big_mx - mx; ++j)
          for (const auto& offset : pp)
            for (long long t = -f; t <= f; ++t) {
              IntVec m(head);
              for (std::size_t x = 0; x < head; ++x) m[x] = (x < 6 ? m1 + i : mx + j) + offset[x];
              long long tail_sum = 0;
              for (std::size_t x = 6; x < head; ++x) tail_sum += m[x];
              m.push_back(m[5] - tail_sum + t);
              if (!std::is_sorted(m.begin(), m.end(), std::greater<>()) || m.back() <= 0) continue;
              long long s = 0, sq = 0;
              for (long long x : m) {
                s += x;
                sq += x * x;
              }
              long long A = kind == 0 ? 4 * d - 1 - s : 4 * d - 3 - s;
              long long B = kind == 0 ? 2 * d * d + 1 - sq : 2 * d * (d - 1) + 1 - sq;
              if (std::min(A, B) < 0) continue;
              for (const auto& tail : solutions(A, B, m.back())) {
                IntVec mm = m;
                mm.insert(mm.end(), tail.begin(), tail.end());
                while (!mm.empty() && mm.back() == 0) mm.pop_back();
                prelist.insert(std::move(mm));
              }
            }

      for (const auto& m : prelist) {
        const long long l = static_cast<long long>(m.size());
        auto at = [&](long long idx) { return m[static_cast<std::size_t>(idx - 1)]; };  // 1-indexed
        if (l <= 6 + k + 2) continue;
        if (at(l - 1) - at(l) > 1) continue;
        if (at(l - 2) > at(l - 1) + 1 && std::llabs(at(l - 2) - at(l - 1) - at(l)) > 1) continue;
        if (k == 1 && l >= 9 && at(8) - at(9) > 1 && std::llabs(at(7) - (at(8) + at(9))) > 1) continue;
        long long rest = 0;
        for (long long x = 7 + k; x <= l; ++x) rest += at(x);
        long long gap = at(6 + k) - rest;
        if (gap >= 0 && gap * gap >= l - k - 5) continue;
        report.candidates.push_back(make_candidate(d, d - kind, m, max_steps));
      }
    }
  }
  finish(report);
  return report;
}

SearchReport inter_sol_less2(long k, long D, long max_steps) {
  require_interval_index(k);
  require_bound(D);
  SearchReport report;
  report.variant = SearchVariant::interval_unequal;
  report.k = k;
  report.D = D;

  for (long long d = 1; d <= D; ++d) {
    const long long sum_budget = 4 * d - 1, sq_budget = 2 * d * d + 1;
    std::set<IntVec> seen;
    // shape 0: (M+1, M^5, m^k, ...), shape 1: (M^5, M-1, m^k, ...)
    for (int shape = 0; shape <= 1; ++shape) {
      const long long sign = shape == 0 ? 1 : -1;
      for (long long M = 1; 6 * M + sign <= sum_budget && 6 * M * M + 2 * sign * M + 1 <= sq_budget; ++M) {
        const long long head_sum = 6 * M + sign, head_sq = 6 * M * M + 2 * sign * M + 1;
        for (long long m = 1; m <= M && head_sum + k * m <= sum_budget && head_sq + k * m * m <= sq_budget; ++m) {
          for (const auto& tail : solutions(sum_budget - head_sum - k * m, sq_budget - head_sq - k * m * m)) {
            if (!tail.empty() && tail.front() > m) continue;
            IntVec v;
            if (shape == 0) {
              v.push_back(M + 1);
              v.insert(v.end(), 5, M);
            } else {
              v.insert(v.end(), 5, M);
              v.push_back(M - 1);
            }
            v.insert(v.end(), static_cast<std::size_t>(k), m);
            v.insert(v.end(), tail.begin(), tail.end());
            if (!seen.insert(v).second) continue;
            report.candidates.push_back(make_candidate(d, d, v, max_steps));
          }
        }
      }
    }
  }
  finish(report);
  return report;
}

}  // namespace pellstairs
