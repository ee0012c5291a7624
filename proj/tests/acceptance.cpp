// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "pellstairs/capacity.hpp"
#include "pellstairs/ech.hpp"
#include "pellstairs/exclass.hpp"
#include "pellstairs/obstruction.hpp"
#include "pellstairs/pell.hpp"
#include "pellstairs/search.hpp"
#include "pellstairs/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace pellstairs;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && limit_seconds > 0 && secs > limit_seconds)
    out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
}

void weight_identities(Outcome& out) {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<long> num(1, 500);
  for (int i = 0; i < 1000; ++i) {
    long p = num(rng), r = num(rng);
    if (p < r) std::swap(p, r);
    Rational a = q(p, r);
    auto w = weight_expansion(a);
    Rational s, s2;
    for (const auto& x : w.entries) {
      s += x;
      s2 += x * x;
    }
    Rational last = Rational(1) / Rational(a.den());
    if (s2 != a || s != a + Rational(1) - last || w.entries.back() != last) out.fail("identity fails at " + a.str());
  }
}

void staircase(Outcome& out) {
  for (long n = 0; n <= 8; ++n) {
    for (const ExClass& cls : {class_E_alpha(n), class_E_beta(n)}) {
      if (!diophantine_ok(cls)) out.fail(cls.str() + " fails the diophantine conditions");
      if (reduces_to_minus_one(phi_star(cls)).verdict != Verdict::reduced) out.fail(cls.str() + " does not reduce");
    }
    if (c_closed_form(alpha(n)).squared() != alpha(n) / Rational(2)) out.fail("c(alpha_n)^2 at n=" + std::to_string(n));
    if (c_closed_form(beta(n)).squared() != alpha(n + 1) / Rational(2))
      out.fail("c(beta_n)^2 at n=" + std::to_string(n));
  }
}

void packing(Outcome& out) {
  const Rational expected[] = {q(1, 2), 1, q(2, 3), q(8, 9), q(9, 10), q(48, 49), q(224, 225), 1};
  for (long k = 1; k <= 8; ++k)
    if (packing_number_cube(k) != expected[k - 1])
      out.fail("p_" + std::to_string(k) + " = " + packing_number_cube(k).str());
}

void e7(Outcome& out) {
  std::vector<ExClass> expected;
  for (const char* s : {"(0,0;-1)", "(1,0;1)", "(1,1;1^3)", "(2,1;1^5)", "(2,2;2,1^5)", "(3,1;1^7)",
                        "(3,2;2^2,1^5)", "(3,3;2^4,1^3)", "(4,3;2^6,1)", "(4,4;3,2^6)"})
    expected.push_back(parse_class(s));
  std::sort(expected.begin(), expected.end());
  auto got = enumerate_E7();
  if (got != expected) out.fail(std::to_string(got.size()) + " classes, expected list differs");
  for (std::size_t i = 0; i < got.size(); ++i)
    for (std::size_t j = i + 1; j < got.size(); ++j)
      if (!got[i].is_sentinel() && !got[j].is_sentinel() && !intersection_ok(got[i], got[j]))
        out.fail("intersection fails for " + got[i].str() + " and " + got[j].str());
}

void ech_identity(Outcome& out) {
  EchSequence e12(Domain::ellipsoid, 1, 2), cube(Domain::polydisc, 1, 1);
  for (long k = 1; k <= 1000; ++k) {
    Rational d(cube_identity_d(k));
    if (e12.at(k) != d || cube.at(k) != d) out.fail("mismatch at k=" + std::to_string(k));
  }
  // ten runs value^count, followed by a larger value
  auto runs_match = [](Domain dom, long a, long b, std::vector<long> counts) {
    EchSequence s(dom, a, b);
    long k = 1;
    for (long value = 0; value < static_cast<long>(counts.size()); ++value)
      for (long i = 0; i < counts[value]; ++i)
        if (s.at(k++) != Rational(value)) return false;
    return s.at(k) > Rational(static_cast<long>(counts.size()) - 1);
  };
  if (!runs_match(Domain::ellipsoid, 1, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10})) out.fail("B(1) runs");
  if (!runs_match(Domain::polydisc, 1, 1, {1, 1, 2, 2, 3, 3, 4, 4, 5, 5})) out.fail("C(1) runs");
  if (!runs_match(Domain::ellipsoid, 1, 3, {1, 1, 1, 2, 2, 2, 3, 3, 3, 4})) out.fail("E(1,3) runs");
}

void table_rows(Outcome& out) {
  const std::vector<std::pair<Rational, Rational>> values{
      {Rational(6), q(7, 4)},    {q(43, 7), q(687, 392)}, {q(37, 6), q(295, 168)}, {q(31, 5), q(37, 21)},
      {q(19, 3), q(25, 14)},     {q(13, 2), q(65, 36)},   {Rational(7), q(15, 8)}};
  std::size_t idx = 0;
  for (const auto& row : capacity_table()) {
    if (!row.primary) continue;
    const auto& [x, cx] = values[idx++];
    Rational s = row.cls.d + row.cls.e;
    if (row.x != x) out.fail("row order at " + x.str());
    if (mu(row.cls, x) != cx) out.fail("mu at " + x.str() + " = " + mu(row.cls, x).str());
    if (c_closed_form(x).value != QuadExt(cx)) out.fail("c at " + x.str());
    // sample points strictly inside ]u, x[ and ]x, v[
    Rational u_in = Rational::parse(std::to_string(static_cast<long>(row.u.to_double() * 1e6) + 1) + "/1000000");
    Rational v_in = Rational::parse(std::to_string(static_cast<long>(row.v.to_double() * 1e6) - 1) + "/1000000");
    for (int t = 1; t <= 9; ++t) {
      Rational lam = q(t, 10);
      Rational left = u_in + lam * (x - u_in), right = x + lam * (v_in - x);
      if (!(row.u < QuadExt(left)) || !(QuadExt(right) < row.v)) {
        out.fail("sample outside the interval at " + x.str());
        continue;
      }
      Rational lp = (row.A + row.B * left) / s, rp = (row.A2 + row.B2 * right) / s;
      if (mu(row.cls, left) != lp || c_closed_form(left).value != QuadExt(lp))
        out.fail("left piece at " + left.str());
      if (mu(row.cls, right) != rp || c_closed_form(right).value != QuadExt(rp))
        out.fail("right piece at " + right.str());
    }
    QuadExt at_u = (QuadExt(row.A) + QuadExt(row.B) * row.u) / QuadExt(s);
    QuadExt at_v = (QuadExt(row.A2) + QuadExt(row.B2) * row.v) / QuadExt(s);
    if (at_u * at_u != row.u / QuadExt(2)) out.fail("c(u)^2 != u/2 at " + x.str());
    if (at_v * at_v != row.v / QuadExt(2)) out.fail("c(v)^2 != v/2 at " + x.str());
    for (const QuadExt& end : {row.u, row.v})
      if (end.is_rational() && c_closed_form(end.rational()).squared() != end.rational() / Rational(2))
        out.fail("closed form at endpoint " + end.str());
  }
}

void point_searches(Outcome& out) {
  const std::vector<std::vector<const char*>> table{
      {"(4,4;3,2^6)"},
      {"(9,9;5^6,3,2)"},
      {"(7,7;4^6,1^3)"},
      {"(28,28;16^5,15,4^4)"},
      {"(11,10;6^6,1^5)"},
      {"(14,14;8^6,2,1^5)", "(84,84;48^5,47,8^6)"},
      {"(28,28;16^6,3,2^6)", "(196,196;112^5,111,16^7)"},
      {}};
  std::size_t rows = 0;
  for (long k = 1; k <= 8; ++k) {
    Rational a = Rational(6) + q(1, k);
    auto found = sol_less(a, d_upper_bound(a)).obstructive_classes();
    std::vector<ExClass> expected;
    for (const char* s : table[k - 1]) expected.push_back(parse_class(s));
    std::sort(expected.begin(), expected.end());
    if (found != expected) out.fail(std::to_string(found.size()) + " classes at " + a.str());
    rows += found.size();
  }
  if (rows != 9) out.fail(std::to_string(rows) + " rows in total");
}

void above_seven(Outcome& out) {
  std::mt19937_64 rng(7032);
  std::uniform_int_distribution<long> den(1, 400);
  int done = 0;
  while (done < 50) {
    long r = den(rng);
    std::uniform_int_distribution<long> num(0, 7 * r);
    Rational a = q(225, 32) + q(num(rng), 32 * r);
    if (a > Rational(8)) continue;
    auto v = c_from_obstructions(a, 13);
    if (v.value != volume_bound(a) || v.source != SourceKind::volume)
      out.fail("obstruction above the volume bound at " + a.str());
    ++done;
  }
  for (const Rational& a : {Rational(8), q(17, 2), q(1001, 7), Rational(64)}) {
    auto v = c_closed_form(a);
    if (v.value != volume_bound(a) || v.source != SourceKind::volume) out.fail("closed form at " + a.str());
    if (d_upper_bound(a) != 0) out.fail("positive bound at " + a.str());
  }
}

void agreement(Outcome& out) {
  std::mt19937_64 rng(9009);
  std::uniform_int_distribution<long> den(1, 64);
  std::set<std::pair<std::string, int>> seen;
  int done = 0;
  while (done < 200) {
    long r = den(rng);
    std::uniform_int_distribution<long> num(r, 8 * r);
    Rational a = q(num(rng), r);
    if (!seen.insert({a.str(), 0}).second) continue;
    auto closed = c_closed_form(a);
    auto search = c_from_obstructions(a);
    if (!search.exact) out.fail("search truncated at " + a.str());
    if (closed.value != search.value)
      out.fail("disagreement at " + a.str() + ": " + closed.value.str() + " vs " + search.value.str());
    ++done;
  }
}

void cremona(Outcome& out) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> deg(0, 200), ent(-10, 120), len(1, 15);
  for (int i = 0; i < 1000; ++i) {
    long long d = deg(rng);
    std::vector<long long> m(len(rng));
    for (auto& x : m) x = ent(rng);
    auto defects = [](const Cp2Class& c) {
      Integer s = 0, s2 = 0;
      for (long long x : c.m) {
        s += static_cast<long>(x);
        s2 += Integer(static_cast<long>(x)) * static_cast<long>(x);
      }
      Integer d = static_cast<long>(c.d);
      return std::pair<Integer, Integer>(s - (3 * d - 1), s2 - (d * d + 1));
    };
    Cp2Class c = make_cp2(d, m);
    if (defects(c) != defects(cremona_move(c))) out.fail("defect changes for " + c.str());
  }
}

}  // namespace

int main() {
  criterion(1, "weight identities on 1000 random rationals", 5, weight_identities);
  criterion(2, "staircase classes and values for n = 0..8", 30, staircase);
  criterion(3, "packing numbers of the cube", 0, packing);
  criterion(4, "classes with at most seven entries", 0, e7);
  criterion(5, "ECH identity up to k = 1000", 0, ech_identity);
  criterion(6, "capacity table at the seven centers", 0, table_rows);
  criterion(7, "point searches at 6 + 1/k", 600, point_searches);
  criterion(8, "volume bound on [225/32, 8] and beyond", 0, above_seven);
  criterion(9, "closed form against searches on 200 points", 900, agreement);
  criterion(10, "Cremona moves preserve the diophantine defects", 0, cremona);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
