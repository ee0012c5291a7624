#include "pellstairs/exclass.hpp"

#include "pellstairs/search.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pellstairs {

namespace {

void sort_desc(std::vector<long long>& m) { std::sort(m.begin(), m.end(), std::greater<>()); }

long long as_integer(const Rational& q, const char* what) {
  if (!q.is_integer() || !q.num().fits_slong_p())
    throw std::domain_error(std::string(what) + " is not a machine integer: " + q.str());
  return q.num().get_si();
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

bool ExClass::is_sentinel() const {
  return d.sign() == 0 && e.sign() == 0 && m.size() == 1 && m[0] == -1;
}

std::string ExClass::str() const {
  return "(" + d.str() + "," + e.str() + ";" + format_runs(m) + ")";
}

bool operator<(const ExClass& a, const ExClass& b) {
  if (a.d != b.d) return a.d < b.d;
  if (a.e != b.e) return a.e < b.e;
  return a.m < b.m;
}

ExClass make_class(const Rational& d, const Rational& e, std::vector<long long> m) {
  sort_desc(m);
  return ExClass{d, e, std::move(m)};
}

std::vector<long long> parse_runs(std::string_view text) {
  std::vector<long long> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in '" + std::string(text) + "'");
    auto caret = item.find('^');
    long long value = std::stoll(item.substr(0, caret));
    long long count = caret == std::string::npos ? 1 : std::stoll(item.substr(caret + 1));
    if (count < 0) throw std::invalid_argument("negative multiplicity in '" + item + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  return out;
}

std::string format_runs(const std::vector<long long>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(m[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

ExClass parse_class(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("class must be written (d,e;m): '" + s + "'");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("missing ';' in class '" + s + "'");
  std::string head = s.substr(0, semi);
  auto comma = head.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("missing e in class '" + s + "'");
  return make_class(Rational::parse(head.substr(0, comma)), Rational::parse(head.substr(comma + 1)),
                    parse_runs(s.substr(semi + 1)));
}

std::string Cp2Class::str() const { return "(" + std::to_string(d) + ";" + format_runs(m) + ")"; }

Cp2Class make_cp2(long long d, std::vector<long long> m) {
  std::erase(m, 0LL);
  sort_desc(m);
  return Cp2Class{d, std::move(m)};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::reduced: return "reduced";
    case Verdict::stuck: return "stuck";
    case Verdict::invalid: return "invalid";
  }
  return "?";
}

std::string ReductionTrace::log() const {
  std::string out;
  for (const auto& s : steps) out += s.str() + "\n";
  out += std::string("verdict: ") + verdict_name(verdict) + " after " + std::to_string(moves()) + " moves\n";
  return out;
}

bool diophantine_ok(const ExClass& c) {
  Rational s, q;
  for (long long x : c.m) {
    s += Rational(Integer(static_cast<long>(x)));
    q += Rational(Integer(static_cast<long>(x)) * Integer(static_cast<long>(x)));
  }
  return s == Rational(2) * (c.d + c.e) - Rational(1) && q == Rational(2) * c.d * c.e + Rational(1);
}

bool cp2_diophantine_ok(const Cp2Class& c) {
  Integer s = 0, q = 0;
  for (long long x : c.m) {
    s += static_cast<long>(x);
    q += Integer(static_cast<long>(x)) * static_cast<long>(x);
  }
  Integer d = static_cast<long>(c.d);
  return s == 3 * d - 1 && q == d * d + 1;
}

Cp2Class phi_star(const ExClass& c) {
  if (c.m.empty()) throw std::invalid_argument("phi_star of a class without entries");
  long long d = as_integer(c.d, "d");
  long long e = as_integer(c.e, "e");
  long long m1 = c.m[0];
  std::vector<long long> out{d - m1, e - m1};
  out.insert(out.end(), c.m.begin() + 1, c.m.end());
  return make_cp2(d + e - m1, std::move(out));
}

Cp2Class cremona_move(const Cp2Class& c) {
  std::vector<long long> m = c.m;
  sort_desc(m);
  while (m.size() < 3) m.push_back(0);
  long long d = c.d;
  std::vector<long long> out{d - m[1] - m[2], d - m[0] - m[2], d - m[0] - m[1]};
  out.insert(out.end(), m.begin() + 3, m.end());
  return make_cp2(2 * d - m[0] - m[1] - m[2], std::move(out));
}

ReductionTrace reduces_to_minus_one(const Cp2Class& c, long max_steps) {
  ReductionTrace t;
  t.steps.push_back(make_cp2(c.d, c.m));
  if (c.d < 0 || max_steps < 1) {
    t.verdict = Verdict::invalid;
    return t;
  }
  for (long step = 0;; ++step) {
    const Cp2Class& cur = t.steps.back();
    if (cur.is_terminal()) {
      t.verdict = Verdict::reduced;
      return t;
    }
    bool negative = std::any_of(cur.m.begin(), cur.m.end(), [](long long x) { return x < 0; });
    if (negative || cur.d < 0 || step >= max_steps) {
      t.verdict = Verdict::stuck;
      return t;
    }
    Cp2Class next = cremona_move(cur);
    bool decreased = next.d < cur.d;
    t.steps.push_back(std::move(next));
    if (!decreased && !t.steps.back().is_terminal()) {
      t.verdict = Verdict::stuck;
      return t;
    }
  }
}

bool is_in_E(const ExClass& c, long max_steps) {
  if (c.is_sentinel()) return true;
  if (!diophantine_ok(c)) return false;
  Cp2Class image;
  try {
    image = phi_star(c);
  } catch (const std::domain_error&) {
    return false;
  }
  return reduces_to_minus_one(image, max_steps).verdict == Verdict::reduced;
}

bool intersection_ok(const ExClass& c1, const ExClass& c2) {
  Integer dot = 0;
  std::size_t n = std::min(c1.m.size(), c2.m.size());
  for (std::size_t i = 0; i < n; ++i) dot += Integer(static_cast<long>(c1.m[i])) * static_cast<long>(c2.m[i]);
  return Rational(dot) <= c1.d * c2.e + c2.d * c1.e;
}

std::vector<ExClass> enumerate_E7(long max_steps) {
  // (d-2)^2 + (e-2)^2 <= 14 keeps d, e <= 5.
  std::vector<ExClass> out{make_class(0, 0, {-1})};
  for (long d = 0; d <= 5; ++d) {
    for (long e = 0; e <= d; ++e) {
      if ((d - 2) * (d - 2) + (e - 2) * (e - 2) > 14) continue;
      long s = 2 * (d + e) - 1;
      long q = 2 * d * e + 1;
      if (s < 0) continue;
      for (auto& m : solutions(s, q, s)) {
        if (m.empty() || m.size() > 7) continue;
        ExClass c = make_class(d, e, m);
        if (is_in_E(c, max_steps)) out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pellstairs
