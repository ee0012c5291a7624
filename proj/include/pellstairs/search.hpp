// Enumeration of candidate classes: restricted partitions, point searches and interval searches.
#pragma once

#include "pellstairs/exactnum.hpp"
#include "pellstairs/exclass.hpp"
#include "pellstairs/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pellstairs {

using IntVec = std::vector<long long>;

// Nonincreasing vectors with entries in [1, cap], sum S and sum of squares Q.
std::vector<IntVec> solutions(long long S, long long Q, long long cap);
// cap = min(S, floor(sqrt(Q))).
std::vector<IntVec> solutions(long long S, long long Q);

// Per-block offsets {0...}, {1,0...}, {1...}, {1...,0} joined over the blocks of cf.
// Duplicates inside a block are dropped.
std::vector<IntVec> perturbations(const ContinuedFraction& cf);

// Offsets of length 6+k: last entry -1, zero, entry 7 set to 1.
std::vector<IntVec> interval_perturbations(long k);

enum class SearchVariant { point, interval_equal, interval_unequal };

const char* variant_name(SearchVariant v);

struct CandidateFlags {
  bool diophantine_ok = false;
  bool reduces = false;
  std::optional<bool> obstructive;  // only for point searches
  bool boundary = false;            // mu == sqrt(a/2) exactly
};

struct Candidate {
  ExClass cls;
  CandidateFlags flags;
};

struct SearchReport {
  SearchVariant variant = SearchVariant::point;
  std::optional<Rational> a;
  std::optional<long> k;
  long D = 0;
  std::vector<Candidate> candidates;  // canonical order

  // Candidates carrying every flag, boundary hits excluded.
  std::vector<ExClass> obstructive_classes() const;
  // Candidates that reduce to (0;-1).
  std::vector<ExClass> reduced_classes() const;
  // {"query": {...}, "candidates": [{"d", "e", "m", "flags"}]}
  std::string to_json() const;
};

// Classes (d,d;m) and (d,d-1;m) with l(m) = l(a), d <= D, obstructive at a.
SearchReport sol_less(const Rational& a, long D, long max_steps = kDefaultMaxSteps);

// Candidates with m1 = ... = m6 for a in ]6+1/(k+1), 6+1/k[.
SearchReport inter_sol_less1(long k, long D, long max_steps = kDefaultMaxSteps);

// Candidates (M+1, M^5, m^k, ...) and (M^5, M-1, m^k, ...) of type (d,d).
SearchReport inter_sol_less2(long k, long D, long max_steps = kDefaultMaxSteps);

}  // namespace pellstairs
