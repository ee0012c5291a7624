// Pell numbers, staircase parameters and the named classes built from them.
#pragma once

#include "pellstairs/exactnum.hpp"
#include "pellstairs/exclass.hpp"

namespace pellstairs {

struct PellPair {
  long n;
  Integer P;
  Integer H;
};

// P0 = 0, P1 = 1, H0 = H1 = 1, x_n = 2 x_{n-1} + x_{n-2}.
PellPair pell(long n);
Integer pell_P(long n);
Integer pell_H(long n);

Rational alpha(long n);
Rational beta(long n);

enum class StairKind { alpha, beta, c, u, v, b };

struct StairPoint {
  StairKind kind;
  long first;   // n for alpha/beta/c, k otherwise
  long second;  // j for u/v, i for b, unused otherwise
  Rational value;
};

// c: c_n for n >= 1; u, v: (k >= 1, j >= 1); b: (k >= 1, i >= 0).
StairPoint stair_point(StairKind kind, long first, long second = 0);

// The continued fraction that defines a staircase point.
std::vector<long> stair_point_cf(StairKind kind, long first, long second = 0);

ExClass class_E_alpha(long n);
ExClass class_E_beta(long n);
ExClass class_E_b(long k, long i);

}  // namespace pellstairs
