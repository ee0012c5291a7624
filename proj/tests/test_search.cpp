#include "pellstairs/obstruction.hpp"
#include "pellstairs/search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>

using namespace pellstairs;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

// Every nonincreasing vector with entries in [1, cap] and sum S, filtered on the square sum.
std::vector<IntVec> brute_partitions(long long S, long long Q, long long cap) {
  std::vector<IntVec> out;
  IntVec cur;
  std::function<void(long long, long long)> rec = [&](long long left, long long top) {
    if (left == 0) {
      long long sq = 0;
      for (long long x : cur) sq += x * x;
      if (sq == Q) out.push_back(cur);
      return;
    }
    for (long long x = std::min(left, top); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(S, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// Obstructive classes of full length at a, found by listing every partition.
std::vector<ExClass> brute_obstructive(const Rational& a, long D) {
  const std::size_t len = weight_length(a);
  std::vector<ExClass> out;
  for (long d = 1; d <= D; ++d)
    for (long e : {d, d - 1}) {
      for (const auto& m : brute_partitions(2 * (d + e) - 1, 2 * d * e + 1, 2 * (d + e) - 1)) {
        if (m.size() != len) continue;
        ExClass c = make_class(d, e, m);
        if (is_obstructive(c, a) && is_in_E(c)) out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<ExClass>& v, const char* cls) {
  return std::find(v.begin(), v.end(), parse_class(cls)) != v.end();
}

}  // namespace

TEST_CASE("restricted partitions") {
  CHECK(solutions(3, 3, 3) == std::vector<IntVec>{{1, 1, 1}});
  CHECK(solutions(5, 7, 5) == std::vector<IntVec>{{2, 1, 1, 1}});
  CHECK(solutions(0, 0) == std::vector<IntVec>{{}});
  CHECK(solutions(-1, 3).empty());
  CHECK(solutions(4, 16, 3).empty());
  for (long long S = 0; S <= 14; ++S)
    for (long long Q = 0; Q <= 60; ++Q)
      for (long long cap : {1LL, 2LL, 3LL, 5LL, 14LL}) {
        CAPTURE(S);
        CAPTURE(Q);
        CAPTURE(cap);
        CHECK(solutions(S, Q, cap) == brute_partitions(S, Q, cap));
      }
}

TEST_CASE("perturbation sets") {
  auto one_block = perturbations(continued_fraction(Rational(2)));
  CHECK(one_block == std::vector<IntVec>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(perturbations(continued_fraction(Rational(1))) == std::vector<IntVec>{{0}, {1}});
  auto two_blocks = perturbations(ContinuedFraction{{2, 1}});
  CHECK(two_blocks.size() == 6);
  for (const auto& v : two_blocks) CHECK(v.size() == 3);
  auto interval = interval_perturbations(3);
  REQUIRE(interval.size() == 3);
  CHECK(interval[0].back() == -1);
  CHECK(interval[2][6] == 1);
  CHECK_THROWS_AS(interval_perturbations(8), std::domain_error);
}

TEST_CASE("point searches at table centers") {
  CHECK(contains(sol_less(q(13, 2), d_upper_bound(q(13, 2))).obstructive_classes(), "(9,9;5^6,3,2)"));
  CHECK(contains(sol_less(q(31, 5), d_upper_bound(q(31, 5))).obstructive_classes(), "(11,10;6^6,1^5)"));
  CHECK(contains(sol_less(q(37, 6), 20).obstructive_classes(), "(14,14;8^6,2,1^5)"));
  CHECK(sol_less(q(49, 8), d_upper_bound(q(49, 8))).obstructive_classes().empty());
  CHECK(sol_less(Rational(6), 5).obstructive_classes() == std::vector<ExClass>{parse_class("(2,2;2,1^5)")});
  CHECK(sol_less(Rational(7), 0).candidates.empty());
  CHECK_THROWS_AS(sol_less(q(1, 2), 3), std::domain_error);
  CHECK_THROWS_AS(sol_less(Rational(3), -1), std::domain_error);
}

TEST_CASE("point search agrees with a full partition sweep") {
  for (const Rational& a : {q(25, 9), q(13, 2), q(19, 3), Rational(6), q(41, 7), Rational(7), q(9, 2)}) {
    CAPTURE(a.str());
    CHECK(sol_less(a, 6).obstructive_classes() == brute_obstructive(a, 6));
  }
}

TEST_CASE("point search flags") {
  auto r = sol_less(q(37, 6), 20);
  for (const auto& c : r.candidates) {
    CHECK(c.flags.obstructive.has_value());
    CHECK((c.cls.e == c.cls.d || c.cls.e == c.cls.d - Rational(1)));
    CHECK(c.cls.m.size() == static_cast<std::size_t>(weight_length(q(37, 6))));
    if (c.flags.boundary) CHECK(c.cls.e == c.cls.d);
  }
  for (const auto& c : r.obstructive_classes()) CHECK(is_obstructive(c, q(37, 6)));
}

TEST_CASE("interval search with equal leading block") {
  auto r = inter_sol_less1(3, 110);
  auto reduced = r.reduced_classes();
  REQUIRE(contains(reduced, "(99,99;56^6,14^4,1^3)"));
  ExClass c = parse_class("(99,99;56^6,14^4,1^3)");
  CHECK_FALSE(is_obstructive(c, q(94, 15)));
  CHECK_FALSE(is_obstructive(c, q(113, 18)));
  for (const auto& cand : r.candidates) {
    CHECK(cand.cls.m.size() > 8 + 3);
    CHECK_FALSE(cand.flags.obstructive.has_value());
  }
  CHECK_THROWS_AS(inter_sol_less1(0, 10), std::domain_error);
  CHECK_THROWS_AS(inter_sol_less1(2, -1), std::domain_error);
}

TEST_CASE("interval search with unequal leading block") {
  for (long k = 1; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(inter_sol_less2(k, interval_search_bound(k, false)).reduced_classes().empty());
  }
  CHECK(inter_sol_less2(1, 3).reduced_classes().empty());
  auto small = inter_sol_less2(1, 10);
  for (const auto& c : small.candidates) {
    CHECK(c.cls.e == c.cls.d);
    CHECK(c.flags.diophantine_ok);
  }
  CHECK_THROWS_AS(inter_sol_less2(8, 3), std::domain_error);
}

TEST_CASE("reports serialize deterministically") {
  auto r = sol_less(q(37, 6), 20);
  std::string first = r.to_json(), second = sol_less(q(37, 6), 20).to_json();
  CHECK(first == second);
  auto j = nlohmann::json::parse(first);
  CHECK(j["query"]["variant"] == "point");
  CHECK(j["query"]["a"] == "37/6");
  CHECK(j["query"]["D"] == 20);
  CHECK(j["query"]["k"].is_null());
  REQUIRE(j["candidates"].size() == r.candidates.size());
  bool found = false;
  for (const auto& c : j["candidates"])
    if (c["d"] == 14 && c["e"] == 14 && c["m"][6] == 2) {
      found = true;
      CHECK(c["flags"]["obstructive"] == true);
      CHECK(c["flags"]["reduces"] == true);
    }
  CHECK(found);
  auto interval = nlohmann::json::parse(inter_sol_less2(2, 5).to_json());
  CHECK(interval["query"]["k"] == 2);
  CHECK(interval["query"]["a"].is_null());
}
