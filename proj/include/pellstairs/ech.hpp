// ECH capacity sequences of ellipsoids E(a,b) and polydiscs P(a,b).
#pragma once

#include "pellstairs/exactnum.hpp"

#include <optional>
#include <queue>
#include <vector>

namespace pellstairs {

enum class Domain { ellipsoid, polydisc };

// Lazily extended sequence c^1, c^2, ... (k is 1-indexed, c^1 = 0).
class EchSequence {
public:
  EchSequence(Domain domain, const Rational& a, const Rational& b);

  Domain domain() const { return domain_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  const Rational& at(long k);
  // Materialized prefix; extension needs a single writer.
  const std::vector<Rational>& prefix() const { return values_; }

private:
  struct Node {
    Rational value;
    long m, n;
    bool operator>(const Node& o) const { return value > o.value; }
  };

  void extend_to(long k);

  Domain domain_;
  Rational a_, b_;
  std::vector<Rational> values_;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> frontier_;
};

// k-th element of the sorted multiset {m a + n b : m, n >= 0}.
Rational ech_ellipsoid(const Rational& a, const Rational& b, long k);
// min { a m + b n : (m+1)(n+1) >= k }.
Rational ech_polydisc(const Rational& a, const Rational& b, long k);
// The unique d with floor((d+1)/2) ceil((d+1)/2) < k <= floor((d+2)/2) ceil((d+2)/2).
long cube_identity_d(long k);

struct Dominance {
  bool dominated;                 // every k <= k_max satisfied c^k(e1) <= c^k(e2)
  std::optional<long> violated_at;
  long k_max;
};

// Checks c^k(e1) <= c^k(e2) for k = 1..k_max; a finite check of the embedding criterion.
Dominance dominates(EchSequence& e1, EchSequence& e2, long k_max);

}  // namespace pellstairs
