// Continued fractions and weight expansions of rationals a >= 1.
#pragma once

#include "pellstairs/exactnum.hpp"

#include <vector>

namespace pellstairs {

struct ContinuedFraction {
  std::vector<long> terms;  // [l0; l1, ..., lN], last term >= 2 unless N == 0

  Rational value() const;
};

// Value of an arbitrary (not necessarily canonical) list of positive terms.
Rational evaluate_cf(const std::vector<long>& terms);

ContinuedFraction continued_fraction(const Rational& a);

struct WeightBlock {
  Rational value;
  long multiplicity;
};

struct WeightExpansion {
  Rational source;
  std::vector<WeightBlock> blocks;
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
};

WeightExpansion weight_expansion(const Rational& a);

// l(a), the number of weights.
long weight_length(const Rational& a);

}  // namespace pellstairs
