#include "pellstairs/capacity.hpp"

#include "pellstairs/obstruction.hpp"
#include "pellstairs/pell.hpp"
#include "pellstairs/search.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pellstairs {

namespace {

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

QuadExt quad(const Rational& x, const Rational& y, long r) { return QuadExt(x, y, Rational(r)); }

bool above_sigma_squared(const Rational& a) {
  return a > Rational(3) && (a - Rational(3)) * (a - Rational(3)) > Rational(8);
}

Rational exact_root(const Rational& r) {
  auto root = r.sqrt_exact();
  if (!root) throw std::logic_error("expected a rational square root of " + r.str());
  return *root;
}

CapacityValue volume_value(const Rational& a) {
  CapacityValue v;
  v.a = a;
  v.value = volume_bound(a);
  v.source = SourceKind::volume;
  return v;
}

CapacityValue staircase_value(const Rational& a) {
  CapacityValue v;
  v.a = a;
  v.source = SourceKind::staircase_segment;
  if (a <= Rational(2)) {
    v.n = 0;
    v.flat = true;
    v.value = QuadExt(1);
    return v;
  }
  for (long n = 0;; ++n) {
    Rational lo = alpha(n), mid = beta(n), hi = alpha(n + 1);
    if (a > hi) continue;
    v.n = n;
    if (a <= mid) {
      v.value = QuadExt(a / exact_root(Rational(2) * lo));
    } else {
      v.flat = true;
      v.value = QuadExt(exact_root(hi / Rational(2)));
    }
    return v;
  }
}

struct CachedSearch {
  long cap = -1;
  std::vector<ExClass> classes;
};

std::mutex cache_mutex;
std::map<std::pair<std::string, long>, CachedSearch> cache;

std::vector<ExClass> obstructive_at_center(const Rational& center, long cap, long max_steps) {
  auto key = std::make_pair(center.str(), max_steps);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.cap >= cap) {
      std::vector<ExClass> out;
      for (const auto& c : it->second.classes)
        if (c.d <= Rational(cap)) out.push_back(c);
      return out;
    }
  }
  auto classes = sol_less(center, cap, max_steps).obstructive_classes();
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[key];
  if (slot.cap < cap) slot = {cap, classes};
  return classes;
}

}  // namespace

const char* source_name(SourceKind s) {
  switch (s) {
    case SourceKind::staircase_segment: return "staircase";
    case SourceKind::table_interval: return "table";
    case SourceKind::volume: return "volume";
    case SourceKind::obstruction_class: return "obstruction";
  }
  return "?";
}

std::string CapacityValue::describe() const {
  switch (source) {
    case SourceKind::staircase_segment: return "staircase";
    case SourceKind::volume: return "volume";
    case SourceKind::table_interval:
    case SourceKind::obstruction_class: return "obstruction " + (cls ? cls->str() : std::string("?"));
  }
  return "?";
}

Rational CapacityValue::squared() const { return (value * value).rational(); }

const std::vector<TableRow>& capacity_table() {
  static const std::vector<TableRow> rows = [] {
    auto row = [](Rational x, const char* cls, long A, long B, long A2, long B2, QuadExt u, QuadExt v,
                  bool primary) {
      return TableRow{x, parse_class(cls), Rational(A), Rational(B), Rational(A2), Rational(B2), u, v, primary};
    };
    return std::vector<TableRow>{
        row(Rational(6), "(2,2;2,1^5)", 1, 1, 7, 0, quad(3, 2, 2), QuadExt(frac(49, 8)), true),
        row(frac(43, 7), "(28,28;16^6,3,2^6)", 6, 15, 92, 1, quad(frac(694, 225), frac(56, 225), 151),
            quad(692, -280, 6), true),
        row(frac(37, 6), "(14,14;8^6,2,1^5)", 6, 7, 43, 1, quad(frac(22, 7), frac(8, 7), 7), quad(153, -14, 110),
            true),
        row(frac(31, 5), "(11,10;6^6,1^5)", 6, 5, 37, 0, quad(frac(321, 100), frac(21, 100), 201),
            QuadExt(frac(2738, 441)), true),
        row(frac(19, 3), "(7,7;4^6,1^3)", 6, 3, 25, 0, quad(frac(31, 9), frac(7, 9), 13), QuadExt(frac(625, 98)),
            true),
        row(frac(13, 2), "(9,9;5^6,3,2)", 0, 5, 26, 1, QuadExt(frac(162, 25)), quad(55, -9, 29), true),
        row(Rational(7), "(4,4;3,2^6)", 1, 2, 15, 0, quad(frac(7, 2), 2, 3), QuadExt(frac(225, 32)), true),
        row(frac(43, 7), "(196,196;112^5,111,16^7)", -1, 112, 687, 0, quad(frac(344, 112), frac(7, 112), 2415),
            QuadExt(frac(471969, 76832)), false),
        row(frac(37, 6), "(84,84;48^5,47,8^6)", -1, 48, 295, 0, quad(frac(148, 48), frac(7, 48), 447),
            QuadExt(frac(87025, 14112)), false),
        row(frac(25, 4), "(28,28;16^5,15,4^4)", -1, 16, 99, 0, quad(frac(50, 16), frac(7, 16), 51),
            QuadExt(frac(9801, 1568)), false),
    };
  }();
  return rows;
}

CapacityValue c_closed_form(const Rational& a) {
  if (a < Rational(1)) throw std::domain_error("c(a) needs a >= 1, got " + a.str());
  if (!above_sigma_squared(a)) return staircase_value(a);
  if (a >= frac(225, 32)) return volume_value(a);
  QuadExt qa(a);
  for (const auto& row : capacity_table()) {
    if (!row.primary) continue;
    Rational s = row.cls.d + row.cls.e;
    std::optional<Rational> piece;
    if (row.u < qa && a <= row.x) piece = (row.A + row.B * a) / s;
    else if (row.x <= a && qa < row.v) piece = (row.A2 + row.B2 * a) / s;
    if (!piece) continue;
    CapacityValue v;
    v.a = a;
    v.value = QuadExt(*piece);
    v.source = SourceKind::table_interval;
    v.x = row.x;
    v.cls = row.cls;
    return v;
  }
  return volume_value(a);
}

std::vector<Rational> stern_brocot_path(const Rational& a) {
  if (a < Rational(1)) throw std::domain_error("Stern-Brocot path needs a >= 1, got " + a.str());
  std::vector<Rational> out;
  Integer lp = 0, lq = 1, rp = 1, rq = 0, p = 1, q = 1;
  while (true) {
    Rational node(p, q);
    out.push_back(node);
    if (node == a) return out;
    if (a > node) {
      lp = p;
      lq = q;
    } else {
      rp = p;
      rq = q;
    }
    p = lp + rp;
    q = lq + rq;
  }
}

CapacityValue c_from_obstructions(const Rational& a, std::optional<long> D, long max_steps) {
  if (a < Rational(1)) throw std::domain_error("c(a) needs a >= 1, got " + a.str());
  if (D && *D < 0) throw std::domain_error("search bound must be >= 0");
  CapacityValue best = volume_value(a);
  if (a >= Rational(8)) return best;
  auto w = weight_expansion(a);
  for (const auto& center : stern_brocot_path(a)) {
    long bound = d_upper_bound(center);
    long cap = D ? std::min(*D, bound) : bound;
    if (cap < bound) best.exact = false;
    if (cap < 1) continue;
    for (const auto& cls : obstructive_at_center(center, cap, max_steps)) {
      Rational m = mu(cls, w);
      if (m.sign() <= 0 || !(QuadExt(m) > best.value)) continue;
      best.value = QuadExt(m);
      best.source = SourceKind::obstruction_class;
      best.cls = cls;
    }
  }
  return best;
}

Rational packing_number_cube(long k) {
  if (k < 1) throw std::domain_error("packing number needs k >= 1");
  Rational kk(k);
  return kk / Rational(2) / c_closed_form(kk).squared();
}

}  // namespace pellstairs
