// The capacity function c(a) for embeddings of E(1,a) into the cube C(A).
#pragma once

#include "pellstairs/exactnum.hpp"
#include "pellstairs/exclass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pellstairs {

enum class SourceKind { staircase_segment, table_interval, volume, obstruction_class };

const char* source_name(SourceKind s);

struct CapacityValue {
  Rational a;
  QuadExt value;
  SourceKind source = SourceKind::volume;
  long n = -1;                   // staircase index
  bool flat = false;             // staircase: constant piece
  std::optional<Rational> x;     // table: center of the interval
  std::optional<ExClass> cls;    // table or obstruction: responsible class
  bool exact = true;             // false for a search that stopped below the analytic bound

  // "staircase", "volume", "obstruction (2,2;2,1^5)"
  std::string describe() const;
  // value^2, always rational.
  Rational squared() const;
};

struct TableRow {
  Rational x;
  ExClass cls;
  Rational A, B;    // (A + B a)/(d+e) left of x
  Rational A2, B2;  // right of x
  QuadExt u, v;     // the piece is active on ]u, v[
  bool primary;     // false for the extra classes at 6 1/7, 6 1/6, 6 1/4
};

// The seven rows on [sigma^2, 7 1/32], ordered by x, followed by three supplementary rows.
const std::vector<TableRow>& capacity_table();

CapacityValue c_closed_form(const Rational& a);

// max(sqrt(a/2), mu over classes found by point searches at a and its Stern-Brocot ancestors).
// Each ancestor is searched up to min(D, d_upper_bound(ancestor)); exact iff D never truncates.
CapacityValue c_from_obstructions(const Rational& a, std::optional<long> D = std::nullopt,
                                  long max_steps = kDefaultMaxSteps);

// Ancestors of a >= 1 in the Stern-Brocot tree rooted at 1, ending with a.
std::vector<Rational> stern_brocot_path(const Rational& a);

// (k/2) / c(k)^2.
Rational packing_number_cube(long k);

}  // namespace pellstairs
