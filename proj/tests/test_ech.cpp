#include "pellstairs/ech.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pellstairs;

namespace {

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

std::vector<Rational> brute_ellipsoid(const Rational& a, const Rational& b, long k_max) {
  std::vector<Rational> all;
  long bound = k_max + 2;
  for (long m = 0; m <= bound; ++m)
    for (long n = 0; n <= bound; ++n) all.push_back(Rational(m) * a + Rational(n) * b);
  std::sort(all.begin(), all.end());
  all.resize(k_max);
  return all;
}

Rational brute_polydisc(const Rational& a, const Rational& b, long k) {
  std::optional<Rational> best;
  for (long m = 0; m <= k; ++m)
    for (long n = 0; n <= k; ++n)
      if ((m + 1) * (n + 1) >= k) {
        Rational v = Rational(m) * a + Rational(n) * b;
        if (!best || v < *best) best = v;
      }
  return *best;
}

std::vector<long> ints(const std::vector<Rational>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.floor().get_si());
  return out;
}

}  // namespace

TEST_CASE("ellipsoid sequences") {
  EchSequence ball(Domain::ellipsoid, 1, 1);
  std::vector<Rational> first;
  for (long k = 1; k <= 10; ++k) first.push_back(ball.at(k));
  CHECK(ints(first) == std::vector<long>{0, 1, 1, 2, 2, 2, 3, 3, 3, 3});
  std::vector<long> e12, e13;
  for (long k = 1; k <= 6; ++k) {
    e12.push_back(ech_ellipsoid(1, 2, k).floor().get_si());
    e13.push_back(ech_ellipsoid(1, 3, k).floor().get_si());
  }
  CHECK(e12 == std::vector<long>{0, 1, 2, 2, 3, 3});
  CHECK(e13 == std::vector<long>{0, 1, 2, 3, 3, 4});
  CHECK_THROWS_AS(ech_ellipsoid(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(ech_ellipsoid(1, 1, 0), std::domain_error);
}

TEST_CASE("polydisc sequences") {
  std::vector<long> cube;
  for (long k = 1; k <= 10; ++k) cube.push_back(ech_polydisc(1, 1, k).floor().get_si());
  CHECK(cube == std::vector<long>{0, 1, 2, 2, 3, 3, 4, 4, 4, 5});
  CHECK(ech_polydisc(q(7, 3), 5, 1) == 0);
  CHECK(ech_polydisc(1, 5, 4) == 3);
  CHECK_THROWS_AS(ech_polydisc(1, -1, 3), std::domain_error);
}

TEST_CASE("sequences agree with brute force") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (int i = 0; i < 25; ++i) {
    Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng));
    CAPTURE(a.str());
    CAPTURE(b.str());
    EchSequence e(Domain::ellipsoid, a, b), p(Domain::polydisc, a, b);
    auto expected = brute_ellipsoid(a, b, 60);
    for (long k = 1; k <= 60; ++k) {
      CHECK(e.at(k) == expected[k - 1]);
      CHECK(p.at(k) == brute_polydisc(a, b, k));
    }
    for (long k = 1; k < 60; ++k) CHECK(p.at(k) <= p.at(k + 1));
  }
}

TEST_CASE("cube identity") {
  CHECK(cube_identity_d(1) == 0);
  CHECK(cube_identity_d(4) == 2);
  CHECK(cube_identity_d(100) == ech_polydisc(1, 1, 100).floor().get_si());
  EchSequence e12(Domain::ellipsoid, 1, 2), cube(Domain::polydisc, 1, 1);
  for (long k = 1; k <= 1000; ++k) {
    CHECK(e12.at(k) == Rational(cube_identity_d(k)));
    CHECK(cube.at(k) == Rational(cube_identity_d(k)));
  }
  CHECK_THROWS_AS(cube_identity_d(0), std::domain_error);
}

TEST_CASE("dominance") {
  EchSequence ball(Domain::ellipsoid, 1, 1), cube(Domain::polydisc, 1, 1);
  auto r = dominates(ball, cube, 50);
  CHECK(r.dominated);
  CHECK_FALSE(r.violated_at.has_value());
  EchSequence long_ellipsoid(Domain::ellipsoid, 1, 4);
  auto bad = dominates(long_ellipsoid, cube, 10);
  CHECK_FALSE(bad.dominated);
  REQUIRE(bad.violated_at.has_value());
  CHECK(*bad.violated_at <= 10);
  CHECK(long_ellipsoid.at(*bad.violated_at) > cube.at(*bad.violated_at));
  EchSequence e12(Domain::ellipsoid, 1, 2);
  CHECK(dominates(e12, cube, 1000).dominated);
  CHECK(dominates(cube, e12, 1000).dominated);
}
