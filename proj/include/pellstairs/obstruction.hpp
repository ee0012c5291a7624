// The obstruction mu(d,e;m)(a) = <m, w(a)> / (d+e), error-vector aggregates and d-bounds.
#pragma once

#include "pellstairs/exactnum.hpp"
#include "pellstairs/exclass.hpp"
#include "pellstairs/weights.hpp"

#include <stdexcept>

namespace pellstairs {

// sqrt(a/2) over the radicand 2a.
QuadExt volume_bound(const Rational& a);
// y(a) = a + 1 - 2 sqrt(2a).
QuadExt y_of(const Rational& a);

// <m, w>, shorter vector padded with zeros.
Rational pairing(const std::vector<long long>& m, const WeightExpansion& w);

Rational mu(const ExClass& cls, const WeightExpansion& w);
Rational mu(const ExClass& cls, const Rational& a);

bool is_obstructive(const ExClass& cls, const WeightExpansion& w);
bool is_obstructive(const ExClass& cls, const Rational& a);

struct Obstruction {
  ExClass cls;
  Rational a;
  Rational mu;
  QuadExt volume_bound;
  bool obstructive;
};

Obstruction obstruction(const ExClass& cls, const Rational& a);

// Aggregates of eps = m - (d+e)/sqrt(2a) w(a), all over the radicand 2a.
struct ErrorStats {
  ExClass cls;
  Rational a;
  QuadExt sum_eps;
  QuadExt sum_eps_sq;
  QuadExt eps_dot_w;
};

ErrorStats error_stats(const ExClass& cls, const Rational& a);

enum class Regime {
  staircase,     // classes beating (a+1)/4 on [sigma^2, 6]
  interval6,     // y(a) > 1/q, a in ]sigma^2, 8[
  above7,        // a in [7 1/32, 8]
  error_vector,  // any a >= 1: sum eps^2 < 1 against the sum identity and the pairing lattice
};

const char* regime_name(Regime r);

class BoundUnavailable : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Largest d that an obstructive class (d,d;m) or (d,d-1;m) at a with l(m) = l(a) can have
// under the given regime. Throws BoundUnavailable when the regime's hypothesis fails.
long d_upper_bound(const Rational& a, Regime regime);

// Smallest bound among the regimes that cover every obstructive class at a.
long d_upper_bound(const Rational& a);

// Bound used to drive the interval searches on ]6+1/(k+1), 6+1/k[ for points with q >= 40;
// leading_block_equal selects the m1 = m6 case.
long interval_search_bound(long k, bool leading_block_equal);

}  // namespace pellstairs
