#include "pellstairs/capacity.hpp"
#include "pellstairs/ech.hpp"
#include "pellstairs/exclass.hpp"
#include "pellstairs/obstruction.hpp"
#include "pellstairs/pell.hpp"
#include "pellstairs/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

using namespace pellstairs;

namespace {

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long max_steps_from_env() {
  const char* raw = std::getenv("PELLSTAIRS_MAX_STEPS");
  if (!raw || !*raw) return kDefaultMaxSteps;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("PELLSTAIRS_MAX_STEPS must be a positive integer");
  return v;
}

Rational parse_point(const std::string& text) {
  Rational a;
  try {
    a = Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (a < Rational(1)) throw UsageError("a must be >= 1, got " + a.str());
  return a;
}

std::string float_text(const QuadExt& v) { return v.decimal(12); }

class Checker {
public:
  void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    ++total_;
    if (ok) ++passed_;
  }
  bool all() const { return passed_ == total_; }
  int passed() const { return passed_; }
  int total() const { return total_; }

private:
  int passed_ = 0, total_ = 0;
};

// capacity

struct CapacityArgs {
  std::string a;
  std::optional<long> bound;
  std::string method = "closed";
};

void print_value(const std::string& label, const CapacityValue& v) {
  std::cout << v.value.str() << " (" << v.describe() << ")\n";
  std::cout << "  " << label << ": " << float_text(v.value);
  if (!v.exact) std::cout << " [lower bound]";
  std::cout << "\n";
}

int cmd_capacity(const CapacityArgs& args, long max_steps) {
  Rational a = parse_point(args.a);
  if (args.bound && *args.bound < 0) throw UsageError("--bound must be >= 0");
  if (args.method == "closed") {
    print_value("closed form", c_closed_form(a));
    return 0;
  }
  auto searched = c_from_obstructions(a, args.bound, max_steps);
  if (args.method == "search") {
    print_value("search", searched);
    return 0;
  }
  auto closed = c_closed_form(a);
  print_value("closed form", closed);
  print_value("search", searched);
  bool agree = closed.value == searched.value;
  std::cout << closed.value.str() << " = sqrt(" << searched.squared().str() << "), "
            << (agree ? "agree" : "disagree") << (searched.exact ? "" : " (search truncated)") << "\n";
  return agree ? 0 : kVerifyFailed;
}

// scan

struct ScanArgs {
  std::string lo, hi;
  long denom = 32;
  long max_denom = 256;
  bool force = false;
  std::string format = "csv";
  std::string output;
};

int cmd_scan(const ScanArgs& args) {
  Rational lo = parse_point(args.lo), hi = parse_point(args.hi);
  if (!(lo < hi)) throw UsageError("empty range: need lo < hi");
  if (args.denom < 1) throw UsageError("--denom must be >= 1");
  if (args.denom > args.max_denom && !args.force)
    throw UsageError("--denom " + std::to_string(args.denom) + " exceeds " + std::to_string(args.max_denom) +
                     "; pass --force to run anyway");
  std::set<Rational> grid;
  for (long q = 1; q <= args.denom; ++q) {
    Integer first = (lo * Rational(q)).ceil(), last = (hi * Rational(q)).floor();
    for (Integer p = first; p <= last; ++p) grid.insert(Rational(p, Integer(q)));
  }

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) throw UsageError("cannot write " + args.output);
  }
  std::ostream& out = args.output.empty() ? std::cout : file;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (args.format == "csv") out << "a_num,a_den,c_exact,c_float,source\n";
  for (const auto& a : grid) {
    auto c = c_closed_form(a);
    if (args.format == "csv") {
      out << a.num().get_str() << "," << a.den().get_str() << "," << c.value.str() << "," << float_text(c.value)
          << "," << source_name(c.source) << "\n";
    } else {
      nlohmann::ordered_json row;
      row["a_num"] = a.num().get_str();
      row["a_den"] = a.den().get_str();
      row["c_exact"] = c.value.str();
      row["c_float"] = float_text(c.value);
      row["source"] = source_name(c.source);
      rows.push_back(row);
    }
  }
  if (args.format == "json") out << rows.dump(1) << "\n";
  return 0;
}

// verify

int verify_e7(long max_steps) {
  const std::vector<std::string> expected{
      "(0,0;-1)",        "(1,0;1)",         "(1,1;1^3)",         "(2,1;1^5)",       "(2,2;2,1^5)",
      "(3,1;1^7)",       "(3,2;2^2,1^5)",   "(3,3;2^4,1^3)",     "(4,3;2^6,1)",     "(4,4;3,2^6)",
  };
  Checker c;
  auto found = enumerate_E7(max_steps);
  std::set<std::string> got;
  for (const auto& cls : found) got.insert(cls.str());
  int reproduced = 0;
  for (const auto& s : expected) {
    bool ok = got.count(s) > 0;
    reproduced += ok;
    c.check(ok, "listed " + s);
  }
  c.check(found.size() == expected.size(), "no extra classes (" + std::to_string(found.size()) + " found)");
  bool pairs = true;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j) pairs = pairs && intersection_ok(found[i], found[j]);
  c.check(pairs, "pairwise intersection condition");
  std::cout << reproduced << "/" << expected.size() << " classes reproduced\n";
  return c.all() ? 0 : kVerifyFailed;
}

int verify_staircase(long n_max, long max_steps) {
  if (n_max < 0) throw UsageError("--n-max must be >= 0");
  Checker c;
  for (long n = 0; n <= n_max; ++n) {
    auto ea = class_E_alpha(n), eb = class_E_beta(n);
    std::string tag = "n=" + std::to_string(n);
    c.check(diophantine_ok(ea) && is_in_E(ea, max_steps), tag + " E(alpha) " + ea.str());
    c.check(diophantine_ok(eb) && is_in_E(eb, max_steps), tag + " E(beta) " + eb.str());
    Rational an = alpha(n), bn = beta(n), an1 = alpha(n + 1);
    c.check(c_closed_form(an).squared() == an / Rational(2), tag + " c(alpha)^2 = alpha/2");
    c.check(c_closed_form(bn).squared() == an1 / Rational(2), tag + " c(beta)^2 = alpha_{n+1}/2");
  }
  std::cout << c.passed() << "/" << c.total() << " staircase checks passed\n";
  return c.all() ? 0 : kVerifyFailed;
}

int verify_ech(long k_max) {
  if (k_max < 1) throw UsageError("--k-max must be >= 1");
  Checker c;
  EchSequence e12(Domain::ellipsoid, 1, 2);
  long bad = 0;
  for (long k = 1; k <= k_max; ++k) {
    Rational d(cube_identity_d(k));
    if (!(e12.at(k) == d && ech_polydisc(1, 1, k) == d)) ++bad;
  }
  c.check(bad == 0, "c_k(E(1,2)) = c_k(P(1,1)) = d(k) for k <= " + std::to_string(k_max));
  auto prefix = [](Domain dom, long a, long b) {
    EchSequence s(dom, a, b);
    std::string out;
    for (long k = 1; k <= 10; ++k) out += (k > 1 ? "," : "") + s.at(k).str();
    return out;
  };
  c.check(prefix(Domain::ellipsoid, 1, 1) == "0,1,1,2,2,2,3,3,3,3", "B(1) = " + prefix(Domain::ellipsoid, 1, 1));
  c.check(prefix(Domain::polydisc, 1, 1) == "0,1,2,2,3,3,4,4,4,5", "C(1) = " + prefix(Domain::polydisc, 1, 1));
  c.check(prefix(Domain::ellipsoid, 1, 3) == "0,1,2,3,3,4,4,5,5,6", "E(1,3) = " + prefix(Domain::ellipsoid, 1, 3));
  return c.all() ? 0 : kVerifyFailed;
}

int verify_tables() {
  Checker c;
  const std::vector<std::string> listed{"7/4", "687/392", "295/168", "37/21", "25/14", "65/36", "15/8"};
  std::size_t i = 0;
  for (const auto& row : capacity_table()) {
    Rational m = mu(row.cls, row.x);
    std::string tag = "x=" + row.x.str() + " " + row.cls.str();
    if (row.primary) {
      c.check(m.str() == listed[i] && c_closed_form(row.x).value == QuadExt(m), tag + " mu(x) = c(x) = " + m.str());
      ++i;
    } else {
      c.check(m < c_closed_form(row.x).value.rational() || m == c_closed_form(row.x).value.rational(),
              tag + " does not exceed c(x)");
    }
    Rational s = row.cls.d + row.cls.e;
    QuadExt at_u = (QuadExt(row.A) + QuadExt(row.B) * row.u) / QuadExt(s);
    QuadExt at_v = (QuadExt(row.A2) + QuadExt(row.B2) * row.v) / QuadExt(s);
    c.check(at_u * at_u == row.u / QuadExt(2) && at_v * at_v == row.v / QuadExt(2),
            tag + " pieces meet sqrt(a/2) at u and v");
    if (!row.primary) continue;
    for (const QuadExt& end : {row.u, row.v}) {
      if (!end.is_rational()) continue;
      Rational e = end.rational();
      c.check(c_closed_form(e).squared() == e / Rational(2), tag + " c(" + e.str() + ")^2 = " + e.str() + "/2");
    }
  }
  const std::vector<std::string> packing{"1/2", "1", "2/3", "8/9", "9/10", "48/49", "224/225", "1"};
  for (long k = 1; k <= 8; ++k)
    c.check(packing_number_cube(k).str() == packing[static_cast<std::size_t>(k - 1)],
            "p_" + std::to_string(k) + " = " + packing_number_cube(k).str());
  std::cout << c.passed() << "/" << c.total() << " table checks passed\n";
  return c.all() ? 0 : kVerifyFailed;
}

// search

struct SearchArgs {
  std::vector<std::string> target;
  std::optional<long> D;
  int variant = 1;
};

int cmd_search(const SearchArgs& args, long max_steps) {
  if (args.target.empty()) throw UsageError("search needs a point or 'interval k'");
  if (args.D && *args.D < 0) throw UsageError("--D must be >= 0");
  if (args.target[0] == "interval") {
    if (args.target.size() != 2) throw UsageError("usage: search interval <k> --D <n>");
    long k = 0;
    try {
      k = std::stol(args.target[1]);
    } catch (const std::exception&) {
      throw UsageError("interval index must be an integer");
    }
    if (k < 1 || k > 7) throw UsageError("interval index k must be in 1..7");
    long D = args.D ? *args.D : interval_search_bound(k, args.variant == 1);
    auto report = args.variant == 1 ? inter_sol_less1(k, D, max_steps) : inter_sol_less2(k, D, max_steps);
    std::cout << report.to_json() << "\n";
    return 0;
  }
  if (args.target.size() != 1) throw UsageError("search takes a single point");
  Rational a = parse_point(args.target[0]);
  long D = args.D ? *args.D : d_upper_bound(a);
  std::cout << sol_less(a, D, max_steps).to_json() << "\n";
  return 0;
}

// ech

struct EchArgs {
  std::string domain;
  std::string a, b;
  long k_max = 10;
  std::vector<std::string> vs;
};

Domain parse_domain(const std::string& s) {
  if (s == "ellipsoid") return Domain::ellipsoid;
  if (s == "polydisc") return Domain::polydisc;
  throw UsageError("unknown domain '" + s + "'");
}

Rational parse_positive(const std::string& s) {
  Rational v;
  try {
    v = Rational::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (v.sign() <= 0) throw UsageError("ECH parameters must be positive");
  return v;
}

int cmd_ech(const EchArgs& args) {
  if (args.k_max < 1) throw UsageError("--k-max must be >= 1");
  EchSequence first(parse_domain(args.domain), parse_positive(args.a), parse_positive(args.b));
  if (args.vs.empty()) {
    std::cout << "k,c_k\n";
    for (long k = 1; k <= args.k_max; ++k) std::cout << k << "," << first.at(k).str() << "\n";
    return 0;
  }
  if (args.vs.size() != 3) throw UsageError("--vs takes <domain> <a> <b>");
  EchSequence second(parse_domain(args.vs[0]), parse_positive(args.vs[1]), parse_positive(args.vs[2]));
  std::cout << "k,c_k,c_k_target,ok\n";
  for (long k = 1; k <= args.k_max; ++k)
    std::cout << k << "," << first.at(k).str() << "," << second.at(k).str() << ","
              << (first.at(k) <= second.at(k) ? "yes" : "no") << "\n";
  auto dom = dominates(first, second, args.k_max);
  std::cerr << (dom.dominated ? "dominated for all k <= " + std::to_string(args.k_max)
                              : "violated at k = " + std::to_string(*dom.violated_at))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of the ellipsoid-into-cube capacity function"};
  app.require_subcommand(1);

  CapacityArgs cap;
  auto* capacity = app.add_subcommand("capacity", "c(a) at a point");
  capacity->add_option("a", cap.a, "rational a >= 1: p/q, integer or w+p/q")->required();
  capacity->add_option("--bound", cap.bound, "largest d searched (search method)");
  capacity->add_option("--method", cap.method, "closed, search or both")
      ->check(CLI::IsMember({"closed", "search", "both"}));

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "c(a) on all p/q in [lo, hi] with q <= denom");
  scan_cmd->add_option("lo", scan.lo)->required();
  scan_cmd->add_option("hi", scan.hi)->required();
  scan_cmd->add_option("--denom", scan.denom, "largest denominator");
  scan_cmd->add_option("--max-denom", scan.max_denom, "refuse larger --denom without --force");
  scan_cmd->add_flag("--force", scan.force);
  scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--output,-o", scan.output, "write to a file instead of stdout");

  std::string suite;
  long n_max = 8, k_max = 1000;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"staircase", "e7", "ech", "tables"}));
  verify->add_option("--n-max", n_max, "staircase: largest n");
  verify->add_option("--k-max", k_max, "ech: largest k");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "point search at a, or 'interval k'");
  search_cmd->add_option("target", search.target)->required();
  search_cmd->add_option("--D", search.D, "largest d");
  search_cmd->add_option("--variant", search.variant, "interval search: 1 (m1 = m6) or 2 (m1 != m6)")
      ->check(CLI::IsMember({1, 2}));

  EchArgs ech;
  auto* ech_cmd = app.add_subcommand("ech", "ECH capacities of E(a,b) or P(a,b)");
  ech_cmd->add_option("domain", ech.domain)->required()->check(CLI::IsMember({"ellipsoid", "polydisc"}));
  ech_cmd->add_option("a", ech.a)->required();
  ech_cmd->add_option("b", ech.b)->required();
  ech_cmd->add_option("--k-max", ech.k_max);
  ech_cmd->add_option("--vs", ech.vs, "compare against <domain> <a> <b>")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    long max_steps = max_steps_from_env();
    if (*capacity) return cmd_capacity(cap, max_steps);
    if (*scan_cmd) return cmd_scan(scan);
    if (*verify) {
      if (suite == "e7") return verify_e7(max_steps);
      if (suite == "staircase") return verify_staircase(n_max, max_steps);
      if (suite == "ech") return verify_ech(k_max);
      return verify_tables();
    }
    if (*search_cmd) return cmd_search(search, max_steps);
    if (*ech_cmd) return cmd_ech(ech);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
