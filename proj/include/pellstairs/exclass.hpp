// Exceptional classes (d, e; m) in the S2xS2 basis and (d; m) in the CP2 basis,
// the basis change phi_*, Cremona moves and reduction to (0; -1).
#pragma once

#include "pellstairs/exactnum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pellstairs {

inline constexpr long kDefaultMaxSteps = 1'000'000;

struct ExClass {
  Rational d;
  Rational e;
  std::vector<long long> m;  // nonincreasing

  bool is_sentinel() const;  // (0, 0; -1)
  std::string str() const;   // "(2,2;2,1^5)"

  friend bool operator==(const ExClass&, const ExClass&) = default;
  // Canonical order: d, then e, then m lexicographically.
  friend bool operator<(const ExClass& a, const ExClass& b);
};

// Builds a class with m sorted nonincreasing.
ExClass make_class(const Rational& d, const Rational& e, std::vector<long long> m);
// Parses "(d,e;m...)" with optional run-length exponents, e.g. "(9,9;5^6,3,2)".
ExClass parse_class(std::string_view text);

// Expands "5^6,3,2" style run-length lists.
std::vector<long long> parse_runs(std::string_view text);
std::string format_runs(const std::vector<long long>& m);

struct Cp2Class {
  long long d = 0;
  std::vector<long long> m;

  bool is_terminal() const { return d == 0 && m.size() == 1 && m[0] == -1; }
  std::string str() const;  // "(6;5,1^12)"

  friend bool operator==(const Cp2Class&, const Cp2Class&) = default;
};

Cp2Class make_cp2(long long d, std::vector<long long> m);  // sorts, drops zeros

enum class Verdict { reduced, stuck, invalid };

struct ReductionTrace {
  std::vector<Cp2Class> steps;  // steps[0] is the normalized input
  Verdict verdict = Verdict::invalid;

  std::size_t moves() const { return steps.empty() ? 0 : steps.size() - 1; }
  // One class per line, followed by the verdict.
  std::string log() const;
};

const char* verdict_name(Verdict v);

// sum m_i = 2(d+e) - 1 and sum m_i^2 = 2de + 1.
bool diophantine_ok(const ExClass& c);
// sum m_i = 3d - 1 and sum m_i^2 = d^2 + 1.
bool cp2_diophantine_ok(const Cp2Class& c);

// (d+e-m1; d-m1, e-m1, m2, ..., mM), sorted with zeros removed.
// Throws std::domain_error if d or e is not an integer.
Cp2Class phi_star(const ExClass& c);

Cp2Class cremona_move(const Cp2Class& c);

ReductionTrace reduces_to_minus_one(const Cp2Class& c, long max_steps = kDefaultMaxSteps);

bool is_in_E(const ExClass& c, long max_steps = kDefaultMaxSteps);

// sum m_i m'_i <= d e' + d' e, shorter vector padded with zeros.
bool intersection_ok(const ExClass& c1, const ExClass& c2);

// All classes with at most seven entries (plus the sentinel), canonical order.
std::vector<ExClass> enumerate_E7(long max_steps = kDefaultMaxSteps);

}  // namespace pellstairs
