// Command-line front end: exact counts, brute-force oracle queries, sweeps
// of formulas against the oracle, generating-function coefficients, and the
// acceptance grid.
//
// Exit codes: 0 success, 1 violated precondition, 2 usage error, 3 numeric
// guard, 4 a verification or self-test mismatch.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latpath/acceptance.hpp"
#include "latpath/boundary_det.hpp"
#include "latpath/chambers.hpp"
#include "latpath/kernel.hpp"
#include "latpath/lgv.hpp"
#include "latpath/motzkin.hpp"
#include "latpath/orthopoly.hpp"
#include "latpath/path_core.hpp"
#include "latpath/plane_closed.hpp"
#include "latpath/qcount.hpp"
#include "latpath/turns.hpp"

using json = nlohmann::json;
using namespace latpath;

namespace {

constexpr int kExitOk = 0, kExitPrecondition = 1, kExitUsage = 2, kExitNumeric = 3, kExitMismatch = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed value: `doc` is the structured form, `text` the plain one.
struct Value {
  json doc;
  std::string text;
};

Value of(const Integer& v) { return {v.get_str(), v.get_str()}; }
Value of(const Rational& v) { return {v.get_str(), v.get_str()}; }

template <class R>
Value of(const Poly<R>& p) {
  json arr = json::array();
  std::string text;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    arr.push_back(p.coeffs()[i].get_str());
    text += (i ? " " : "") + p.coeffs()[i].get_str();
  }
  if (p.coeffs().empty()) {
    arr.push_back("0");
    text = "0";
  }
  return {json{{"polynomial", arr}}, text};
}

template <class R>
Value of(const TruncSeries<R>& f) {
  json arr = json::array();
  std::string text;
  for (int i = 0; i <= f.order(); ++i) {
    arr.push_back(f[std::size_t(i)].get_str());
    text += (i ? " " : "") + f[std::size_t(i)].get_str();
  }
  return {json{{"order", f.order()}, {"coefficients", arr}}, text};
}

Value of_polys(const std::vector<IPoly>& ps) {
  json arr = json::array();
  std::string text;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Value v = of(ps[i]);
    arr.push_back(v.doc["polynomial"]);
    text += (i ? "\n" : "") + v.text;
  }
  return {json{{"order", long(ps.size()) - 1}, {"polynomial_coefficients", arr}}, text};
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::vector<long> parse_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_long(part, what));
  return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw UsageError("expected a rational p/q for " + what + ", got '" + s + "'");
  if (r.get_den() == 0) throw UsageError("zero denominator in " + what);
  r.canonicalize();
  return r;
}

// Positional parameters of a count family: 'i' integer, 'v' comma list,
// 'q' rational.
struct Param {
  std::string name;
  char kind;
};

struct Args {
  std::map<std::string, long> i;
  std::map<std::string, std::vector<long>> v;
  std::map<std::string, Rational> q;
  std::string kind = "ne";
  std::string variant = "last-touch";
  long I(const std::string& k) const { return i.at(k); }
  const std::vector<long>& V(const std::string& k) const { return v.at(k); }
  TurnKind turn_kind() const {
    if (kind == "ne") return TurnKind::NE;
    if (kind == "en") return TurnKind::EN;
    throw UsageError("--kind must be ne or en");
  }
};

struct Family {
  std::string name;
  std::vector<Param> params;
  std::string help;
  std::function<Value(const Args&)> run;
};

Point P(const std::vector<long>& v) { return Point(v.begin(), v.end()); }

const std::vector<Family>& count_families() {
  using A = const Args&;
  static const std::vector<Family> fams = {
      {"simple", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "unit-step paths (a,b) -> (c,d)",
       [](A x) { return of(count_simple(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"pm", {{"n", 'i'}, {"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "n steps from (+-1,0),(0,+-1)",
       [](A x) { return of(count_pm(x.I("n"), x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"delannoy", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "steps E, N, NE",
       [](A x) { return of(delannoy(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"area", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "q-count by area under the path",
       [](A x) { return of(area_gf(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"below-diagonal", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "paths weakly below y = x",
       [](A x) { return of(below_diagonal(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"catalan", {{"n", 'i'}}, "Catalan number", [](A x) { return of(catalan(x.I("n"))); }},
      {"ballot", {{"c", 'i'}, {"d", 'i'}}, "ballot number", [](A x) { return of(ballot(x.I("c"), x.I("d"))); }},
      {"between-diagonals", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"s", 'i'}, {"t", 'i'}},
       "paths with x + t >= y >= x + s",
       [](A x) {
         return of(between_diagonals(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("s"), x.I("t")));
       }},
      {"between-diagonals-trig", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"s", 'i'}, {"t", 'i'}},
       "same, trigonometric form",
       [](A x) {
         return of(between_diagonals_trig(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("s"), x.I("t")));
       }},
      {"rational-catalan", {{"r", 'i'}, {"s", 'i'}}, "paths (0,0) -> (r,s) below ry = sx",
       [](A x) { return of(rational_catalan(x.I("r"), x.I("s"))); }},
      {"slope-mu", {{"c", 'i'}, {"d", 'i'}, {"mu", 'i'}}, "paths (0,0) -> (c,d) below x = mu y",
       [](A x) { return of(below_slope_mu(x.I("c"), x.I("d"), x.I("mu"))); }},
      {"slope-mu-general", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"mu", 'i'}},
       "paths (a,b) -> (c,d) below x = mu y (--variant last-touch|inclusion-exclusion)",
       [](A x) {
         SlopeVariant v;
         if (x.variant == "last-touch") v = SlopeVariant::LastTouch;
         else if (x.variant == "inclusion-exclusion") v = SlopeVariant::InclusionExclusion;
         else throw UsageError("--variant must be last-touch or inclusion-exclusion");
         return of(below_slope_mu_general(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("mu"), v));
       }},
      {"sato-23", {{"n", 'i'}}, "paths below 2x >= 3y (rational slope example)",
       [](A x) { return of(sato_example_23(x.I("n"))); }},
      {"kreweras", {{"e1", 'i'}, {"e2", 'i'}, {"e3", 'i'}}, "paths in Z^3 with x1 >= max(x2, x3)",
       [](A x) { return of(kreweras(x.I("e1"), x.I("e2"), x.I("e3"))); }},
      {"ladder", {{"a", 'v'}, {"b", 'v'}}, "paths between ladder bounds a_i >= b_i",
       [](A x) { return of(ladder_count({x.V("a"), x.V("b")})); }},
      {"motzkin", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "Motzkin paths (a,b) -> (c,d)",
       [](A x) { return of(motzkin_count(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"schroeder", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "Schroeder paths (a,b) -> (c,d)",
       [](A x) { return of(schroeder_count(x.I("a"), x.I("b"), x.I("c"), x.I("d"))); }},
      {"motzkin-number", {{"n", 'i'}}, "Motzkin number M_n", [](A x) { return of(motzkin_number(x.I("n"))); }},
      {"schroeder-number", {{"n", 'i'}}, "large Schroeder number S_n",
       [](A x) { return of(schroeder_number(x.I("n"))); }},
      {"strip", {{"r", 'i'}, {"s", 'i'}, {"k", 'i'}, {"n", 'i'}}, "Motzkin paths in 0 <= y <= k",
       [](A x) {
         const int k = int(x.I("k"));
         return of(strip_count_transfer<Integer>(int(x.I("r")), int(x.I("s")), k, int(x.I("n")),
                                                 MotzkinWeighting<Integer>::constant(1, 1, std::max(k, 0))));
       }},
      {"strip-trig", {{"r", 'i'}, {"s", 'i'}, {"k", 'i'}, {"n", 'i'}}, "same, trigonometric form",
       [](A x) { return of(strip_count_trig(int(x.I("r")), int(x.I("s")), int(x.I("k")), int(x.I("n")))); }},
      {"gambler-ruin", {{"a", 'i'}, {"R", 'i'}, {"N", 'i'}, {"pA", 'q'}, {"pB", 'q'}},
       "probability of ruin exactly in round N",
       [](A x) { return of(gambler_ruin(x.I("a"), x.I("R"), x.I("N"), x.q.at("pA"), x.q.at("pB"))); }},
      {"hook-content", {{"lambda", 'v'}, {"a", 'i'}}, "tableaux of shape lambda with entries in [1, a]",
       [](A x) { return of(hook_content(x.V("lambda"), x.I("a"))); }},
      {"turns", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"l", 'i'}}, "paths with l turns (--kind ne|en)",
       [](A x) { return of(turns_unrestricted(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("l"), x.turn_kind())); }},
      {"turns-below-diagonal", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"l", 'i'}},
       "paths below y = x with l turns (--kind ne|en)",
       [](A x) {
         return of(turns_below_diagonal(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("l"), x.turn_kind()));
       }},
      {"turns-two-boundaries",
       {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}, {"s", 'i'}, {"t", 'i'}, {"l", 'i'}},
       "paths in a diagonal band with l NE-turns",
       [](A x) {
         return of(turns_two_boundaries(x.I("a"), x.I("b"), x.I("c"), x.I("d"), x.I("s"), x.I("t"), x.I("l")));
       }},
      {"turns-slope-mu", {{"c", 'i'}, {"d", 'i'}, {"mu", 'i'}, {"l", 'i'}},
       "paths below x = mu y with l turns (--kind ne|en)",
       [](A x) { return of(turns_slope_mu(x.I("c"), x.I("d"), x.I("mu"), x.I("l"), x.turn_kind())); }},
      {"runs", {{"a", 'i'}, {"b", 'i'}, {"c", 'i'}, {"d", 'i'}}, "generating polynomial of runs",
       [](A x) { return of(run_gf(x.I("a"), x.I("b"), x.I("c"), x.I("d"), TurnBoundary::None)); }},
      {"hyperplane", {{"mu", 'v'}, {"c", 'v'}}, "unit-step paths with x_0 >= sum mu_i x_i",
       [](A x) { return of(hyperplane_bound(x.V("mu"), x.V("c"))); }},
      {"typeA", {{"a", 'v'}, {"e", 'v'}}, "unit-step paths in x_1 >= ... >= x_d",
       [](A x) { return of(typeA_det(P(x.V("a")), P(x.V("e")))); }},
      {"hook-formula", {{"lambda", 'v'}}, "standard Young tableaux",
       [](A x) { return of(hook_formula(x.V("lambda"))); }},
      {"lock-step", {{"a", 'v'}, {"e", 'v'}, {"m", 'i'}}, "diagonal +-1 steps in x_1 > ... > x_d",
       [](A x) { return of(lock_step_det(P(x.V("a")), P(x.V("e")), x.I("m"))); }},
      {"typeC", {{"a", 'v'}, {"e", 'v'}, {"m", 'i'}}, "diagonal +-1 steps in x_1 > ... > x_d > 0",
       [](A x) { return of(typeC_det(P(x.V("a")), P(x.V("e")), x.I("m"))); }},
      {"affineA", {{"a", 'v'}, {"e", 'v'}, {"N", 'i'}}, "unit steps in x_1 > ... > x_d > x_1 - N",
       [](A x) { return of(affineA_count(P(x.V("a")), P(x.V("e")), x.I("N"))); }},
      {"affineA-pm", {{"a", 'v'}, {"e", 'v'}, {"N", 'i'}, {"m", 'i'}}, "+-e_i steps in the same alcove",
       [](A x) { return of(affineA_pm_egf(P(x.V("a")), P(x.V("e")), x.I("N"), x.I("m"))); }},
      {"affineA-lockstep", {{"a", 'v'}, {"e", 'v'}, {"N", 'i'}, {"m", 'i'}}, "diagonal steps in the same alcove",
       [](A x) { return of(affineA_lockstep(P(x.V("a")), P(x.V("e")), x.I("N"), x.I("m"))); }},
      {"affineC-pm", {{"a", 'v'}, {"e", 'v'}, {"N", 'i'}, {"m", 'i'}}, "+-e_i steps in N > x_1 > ... > x_d > 0",
       [](A x) { return of(affineC_pm(P(x.V("a")), P(x.V("e")), x.I("N"), x.I("m"))); }},
      {"affineC-lockstep", {{"a", 'v'}, {"e", 'v'}, {"N", 'i'}, {"m", 'i'}}, "diagonal steps in the same alcove",
       [](A x) { return of(affineC_lockstep(P(x.V("a")), P(x.V("e")), x.I("N"), x.I("m"))); }},
      {"lukasiewicz", {{"n", 'i'}}, "Lukasiewicz paths of length n", [](A x) { return of(lukasiewicz_count(x.I("n"))); }},
      {"q-catalan", {{"n", 'i'}}, "Carlitz-Riordan q-Catalan polynomial",
       [](A x) { return of(q_catalan_cr(x.I("n"))); }},
      {"q-catalan-maj", {{"n", 'i'}}, "major-index q-Catalan polynomial",
       [](A x) { return of(q_catalan_maj(x.I("n"))); }},
  };
  return fams;
}

const Family& find_family(const std::string& name) {
  for (const auto& f : count_families())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : count_families()) known += (known.empty() ? "" : ", ") + f.name;
  throw UsageError("unknown count family '" + name + "'; known: " + known);
}

Args bind_args(const Family& f, const std::vector<std::string>& raw, json& params) {
  if (raw.size() != f.params.size()) {
    std::string sig;
    for (const auto& p : f.params) sig += " <" + p.name + (p.kind == 'v' ? ",..." : "") + ">";
    throw UsageError("count " + f.name + " expects" + sig);
  }
  Args a;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& p = f.params[k];
    if (p.kind == 'i') {
      a.i[p.name] = parse_long(raw[k], p.name);
      params[p.name] = a.i[p.name];
    } else if (p.kind == 'v') {
      a.v[p.name] = parse_list(raw[k], p.name);
      params[p.name] = a.v[p.name];
    } else {
      a.q[p.name] = parse_rational(raw[k], p.name);
      params[p.name] = a.q[p.name].get_str();
    }
  }
  return a;
}

StepSet step_set_named(const std::string& name, std::size_t dim, const std::vector<long>& jumps) {
  if (name == "simple") return StepSet::simple(dim);
  if (name == "pm") return StepSet::pm_unit(dim);
  if (name == "diag") return StepSet::diag_pm(dim);
  if (name == "delannoy") return StepSet::delannoy();
  if (name == "dyck") return StepSet::dyck();
  if (name == "motzkin") return StepSet::motzkin();
  if (name == "schroeder") return StepSet::schroeder();
  if (name == "jumps") {
    if (jumps.empty()) throw UsageError("--steps jumps needs --jumps b1,b2,...");
    return StepSet::jumps(jumps);
  }
  throw UsageError("unknown step set '" + name + "' (simple, pm, diag, delannoy, dyck, motzkin, schroeder, jumps)");
}

Statistic statistic_named(const std::string& s) {
  static const std::map<std::string, Statistic> m = {
      {"area", Statistic::Area},   {"ne-turns", Statistic::NETurns}, {"en-turns", Statistic::ENTurns},
      {"runs", Statistic::Runs},   {"peaks", Statistic::Peaks},      {"peak-maj", Statistic::PeakMaj},
      {"maj", Statistic::Maj},     {"dyck-area", Statistic::DyckArea}};
  auto it = m.find(s);
  if (it == m.end()) throw UsageError("unknown statistic '" + s + "'");
  return it->second;
}

Value series_named(const std::string& name, int order, const std::vector<long>& jumps, long k) {
  if (order < 0) fail_pre("series: --order >= 0 violated");
  if (name == "motzkin") return of(motzkin_gf(order));
  if (name == "schroeder") return of(schroeder_gf(order));
  if (name == "catalan") {
    auto z = IPoly::var();
    return of(cf_series<Integer>(MotzkinWeighting<IPoly>::constant(IPoly(0), z, order), std::nullopt, order));
  }
  if (name == "lukasiewicz") return of(lukasiewicz_gf(order));
  if (name == "nonneg-walks" || name == "walks" || name == "nonneg-height") {
    if (jumps.empty()) throw UsageError("series " + name + " needs --jumps b1,b2,...");
    auto s = WeightedStepSet1D::unit(jumps);
    if (name == "nonneg-walks") return of(nonneg_walk_gf(s, order));
    if (name == "walks") return of(walk_gf_by_height(s, k, order));
    return of(nonneg_end_height_gf(s, k, order));
  }
  if (name == "q-catalan") return of_polys(q_catalan_cr_cf(std::max(order, 0), order));
  if (name == "rogers-ramanujan-1") return of(rr_sum_side(1, order));
  if (name == "rogers-ramanujan-2") return of(rr_sum_side(2, order));
  if (name == "ramanujan-cf") return of(ramanujan_cf(order));
  throw UsageError("unknown series '" + name +
                   "' (motzkin, schroeder, catalan, lukasiewicz, nonneg-walks, walks, nonneg-height, q-catalan, "
                   "rogers-ramanujan-1, rogers-ramanujan-2, ramanujan-cf)");
}

struct Options {
  bool as_json = false;
  int order = 10;
  long max = 6;
  unsigned seed = 20261016u;
};

void emit(const Options& o, const std::vector<std::string>& argv, const std::string& command, const std::string& name,
          const json& params, const Value& v, const std::string& provenance, double ms) {
  if (o.as_json) {
    json doc{{"command", command}, {"name", name},           {"parameters", params}, {"value", v.doc},
             {"provenance", provenance}, {"elapsed_ms", ms}, {"argv", argv}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << v.text << "\n";
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run(const std::vector<std::string>& argv);

// Re-runs the command recorded in a structured document and compares the
// value; prints the fresh document.
int replay(const std::string& path, bool as_json) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("replay: not a JSON document: ") + e.what());
  }
  if (!doc.contains("argv") || !doc["argv"].is_array()) throw UsageError("replay: document has no argv");
  std::vector<std::string> args = doc["argv"].get<std::vector<std::string>>();
  if (std::find(args.begin(), args.end(), "--json") == args.end()) args.push_back("--json");
  std::stringstream captured;
  auto* old = std::cout.rdbuf(captured.rdbuf());
  int code = 0;
  try {
    code = run(args);
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  if (code != kExitOk) return code;
  json fresh = json::parse(captured.str());
  const bool same = fresh["value"] == doc["value"];
  if (as_json) {
    std::cout << json{{"command", "replay"}, {"identical", same}, {"value", fresh["value"]}}.dump() << "\n";
  } else {
    std::cout << (same ? "identical" : "DIFFERENT") << "\n";
  }
  return same ? kExitOk : kExitMismatch;
}

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact lattice path enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "emit one structured JSON document");
  app.add_option("--order", o.order, "series truncation order");
  app.add_option("--max", o.max, "coordinate bound for verify sweeps");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::string family, kind = "ne", variant = "last-touch", steps = "simple", stat, from, to, jumps_s, file = "-";
  std::vector<std::string> rest, halfspaces;
  std::optional<long> length;
  long height = 0;

  auto* count = app.add_subcommand("count", "evaluate a closed formula");
  count->add_option("family", family, "formula family (see `list`)")->required();
  count->add_option("params", rest, "integer parameters; vectors as comma lists");
  count->add_option("--kind", kind, "turn kind: ne or en");
  count->add_option("--variant", variant, "slope-mu-general variant");

  auto* oracle = app.add_subcommand("oracle", "brute-force path enumeration");
  oracle->add_option("--from", from, "start point, comma list")->required();
  oracle->add_option("--to", to, "end point, comma list")->required();
  oracle->add_option("--steps", steps, "simple, pm, diag, delannoy, dyck, motzkin, schroeder, jumps");
  oracle->add_option("--jumps", jumps_s, "jump heights for --steps jumps");
  oracle->add_option("--halfspace", halfspaces, "r1,...,rd:c meaning r.x >= c (repeatable)");
  oracle->add_option("--length", length, "exact number of steps");
  oracle->add_option("--stat", stat, "statistic for a generating polynomial");

  auto* verify = app.add_subcommand("verify", "sweep a formula family against the oracle");
  verify->add_option("family", family)->required();

  auto* series = app.add_subcommand("series", "generating function coefficients");
  series->add_option("family", family)->required();
  series->add_option("--jumps", jumps_s, "jump heights for directed walks");
  series->add_option("--height", height, "end height for walks / nonneg-height");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance grid");
  auto* list = app.add_subcommand("list", "list count, verify and series families");
  auto* rerun = app.add_subcommand("replay", "re-run a structured document and compare");
  rerun->add_option("file", file, "document path or - for stdin");

  std::vector<const char*> cargv{"latpath"};
  for (const auto& s : argv) cargv.push_back(s.c_str());
  try {
    app.parse(int(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  if (*count) {
    const Family& f = find_family(family);
    json params = json::object();
    Args a = bind_args(f, rest, params);
    a.kind = kind;
    a.variant = variant;
    if (family.rfind("turns", 0) == 0 && family != "turns-two-boundaries") params["kind"] = kind;
    if (family == "slope-mu-general") params["variant"] = variant;
    Value v = f.run(a);
    emit(o, argv, "count", family, params, v, "formula", ms_since(t0));
    return kExitOk;
  }
  if (*oracle) {
    Point a = P(parse_list(from, "--from")), e = P(parse_list(to, "--to"));
    if (a.size() != e.size() || a.empty()) throw UsageError("--from and --to need the same positive dimension");
    std::vector<long> jumps = parse_list(jumps_s, "--jumps");
    Restriction r;
    json hs = json::array();
    for (const auto& h : halfspaces) {
      auto colon = h.find(':');
      if (colon == std::string::npos) throw UsageError("--halfspace expects r1,...,rd:c");
      Point rv = P(parse_list(h.substr(0, colon), "--halfspace"));
      if (rv.size() != a.size()) throw UsageError("--halfspace normal has the wrong dimension");
      r.and_halfspace(rv, parse_long(h.substr(colon + 1), "--halfspace"));
      hs.push_back(h);
    }
    PathQuery q{a, e, step_set_named(steps, a.size(), jumps), r, length};
    json params{{"from", a}, {"to", e}, {"steps", steps}, {"halfspaces", hs}};
    if (length) params["length"] = *length;
    if (!jumps.empty()) params["jumps"] = jumps;
    Value v;
    if (stat.empty()) {
      v = of(oracle_count(q));
    } else {
      params["stat"] = stat;
      v = of(oracle_gf(q, statistic_named(stat)));
    }
    emit(o, argv, "oracle", steps, params, v, "oracle", ms_since(t0));
    return kExitOk;
  }
  if (*verify) {
    const auto fams = verify_families();
    if (std::find(fams.begin(), fams.end(), family) == fams.end()) {
      std::string known;
      for (const auto& f : fams) known += (known.empty() ? "" : ", ") + f;
      throw UsageError("unknown verify family '" + family + "'; known: " + known);
    }
    SweepResult r = run_verify(family, o.max, o.seed);
    const std::string summary = r.ok() ? "OK " + std::to_string(r.cases) + " cases"
                                       : "MISMATCH " + std::to_string(r.mismatches) + " of " +
                                             std::to_string(r.cases) + " cases; first: " + r.first_mismatch;
    json value{{"cases", r.cases}, {"mismatches", r.mismatches}, {"ok", r.ok()}};
    if (!r.ok()) value["first_mismatch"] = r.first_mismatch;
    emit(o, argv, "verify", family, json{{"max", o.max}, {"seed", o.seed}}, {value, summary}, "formula|oracle",
         ms_since(t0));
    return r.ok() ? kExitOk : kExitMismatch;
  }
  if (*series) {
    std::vector<long> jumps = parse_list(jumps_s, "--jumps");
    Value v = series_named(family, o.order, jumps, height);
    json params{{"order", o.order}};
    if (!jumps.empty()) {
      params["jumps"] = jumps;
      params["height"] = height;
    }
    emit(o, argv, "series", family, params, v, "formula", ms_since(t0));
    return kExitOk;
  }
  if (*selftest) {
    int failed = 0;
    json rows = json::array();
    run_acceptance(o.seed, [&](const CriterionResult& r) {
      failed += !r.sweep.ok();
      if (o.as_json) {
        rows.push_back({{"id", r.info.id},
                        {"title", r.info.title},
                        {"pass", r.sweep.ok()},
                        {"cases", r.sweep.cases},
                        {"mismatches", r.sweep.mismatches},
                        {"first_mismatch", r.sweep.first_mismatch},
                        {"seconds", r.seconds}});
      } else {
        std::cout << format_criterion(r) << std::endl;
      }
    });
    if (o.as_json) {
      std::cout << json{{"command", "selftest"}, {"parameters", {{"seed", o.seed}}}, {"value", rows},
                        {"provenance", "formula|oracle"}, {"elapsed_ms", ms_since(t0)}, {"argv", argv}}
                       .dump()
                << "\n";
    } else {
      std::cout << (13 - failed) << " of 13 criteria passed\n";
    }
    return failed ? kExitMismatch : kExitOk;
  }
  if (*list) {
    std::cout << "count families:\n";
    for (const auto& f : count_families()) {
      std::string sig;
      for (const auto& p : f.params) sig += " <" + p.name + (p.kind == 'v' ? ",..." : "") + ">";
      std::cout << "  " << f.name << sig << "  -- " << f.help << "\n";
    }
    std::cout << "verify families:\n";
    for (const auto& f : verify_families()) std::cout << "  " << f << "\n";
    std::cout << "series: motzkin schroeder catalan lukasiewicz nonneg-walks walks nonneg-height q-catalan "
                 "rogers-ramanujan-1 rogers-ramanujan-2 ramanujan-cf\n";
    return kExitOk;
  }
  if (*rerun) return replay(file, o.as_json);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NumericGuardError& e) {
    std::cerr << "numeric guard: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
