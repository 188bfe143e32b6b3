// Command-line front end: eval, table, poly, verify, reduce.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gpg/errors.hpp"
#include "gpg/families.hpp"
#include "gpg/report.hpp"
#include "gpg/theorems.hpp"

namespace {

using nlohmann::ordered_json;
using gpg::Rational;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::size_t n = 0;
  std::optional<std::size_t> n_max;
  int k = 1;
  int alpha = 1;
  std::string lambda = "1", rho = "0", u = "-1", log_a = "0", log_b = "1";
  std::string a_sugar, b_sugar;
  std::string x = "0", y = "0", z = "0";
  std::string family;
  std::string lambda_deg = "0", log_c = "1";
  int r = 1;
  int order = 1;
  std::string format = "json";
  std::string out;
  std::string suite;
  int trials = 20;
  std::uint64_t seed = 42;
  int item = 0;
  bool oracle = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
  if (auto r = Rational::try_parse(text)) return *r;
  throw UsageError("--" + flag + ": '" + text + "' is not a rational (expected [+-]p or [+-]p/q)");
}

/// `--a 1|e` and `--b e|1` set log a / log b to 0 or 1.
Rational base_sugar(const std::string& flag, const std::string& text) {
  if (text == "1") return Rational(0);
  if (text == "e") return Rational(1);
  throw UsageError("--" + flag + ": expected 1 or e, got '" + text + "'");
}

gpg::GParams gparams(const Options& o) {
  gpg::GParams p;
  p.k = o.k;
  p.alpha = o.alpha;
  p.lambda = parse_flag("lambda", o.lambda);
  p.rho = parse_flag("rho", o.rho);
  p.u = parse_flag("u", o.u);
  p.log_a = o.a_sugar.empty() ? parse_flag("log-a", o.log_a) : base_sugar("a", o.a_sugar);
  p.log_b = o.b_sugar.empty() ? parse_flag("log-b", o.log_b) : base_sugar("b", o.b_sugar);
  if (p.alpha < 1) throw UsageError("--alpha must be >= 1");
  return p;
}

ordered_json gparams_json(const gpg::GParams& p) {
  return {{"k", p.k},
          {"alpha", p.alpha},
          {"lambda", p.lambda.str()},
          {"rho", p.rho.str()},
          {"u", p.u.str()},
          {"log_a", p.log_a.str()},
          {"log_b", p.log_b.str()}};
}

void add_point(ordered_json& j, const Rational& x, const Rational& y, const Rational& z) {
  j["x"] = x.str();
  j["y"] = y.str();
  j["z"] = z.str();
}

std::size_t default_n_max() {
  if (const char* env = std::getenv("GPG_DEFAULT_ORDER")) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(env, &pos);
      if (pos == std::string(env).size() && v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GPG_DEFAULT_ORDER: '") + env + "' is not a nonnegative integer");
  }
  return 10;
}

std::size_t n_max_of(const Options& o) { return o.n_max ? *o.n_max : default_n_max(); }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file '" + o.out + "'");
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_eval(const Options& o) {
  const gpg::GParams p = gparams(o);
  const Rational x = parse_flag("x", o.x), y = parse_flag("y", o.y), z = parse_flag("z", o.z);
  const Rational value = gpg::ghat(o.n, p, x, y, z);
  ordered_json params = gparams_json(p);
  add_point(params, x, y, z);
  if (o.format == "csv") {
    emit(o, "n,value\n" + std::to_string(o.n) + "," + value.str() + "\n");
  } else {
    ordered_json j;
    j["command"] = "eval";
    j["n"] = o.n;
    j["params"] = params;
    j["value"] = value.str();
    emit(o, dump(j));
  }
  return kExitPass;
}

int cmd_table(const Options& o) {
  const auto id = gpg::family_from_name(o.family);
  if (!id) {
    std::string known;
    for (auto f : gpg::all_families()) known += (known.empty() ? "" : ", ") + std::string(gpg::family_name(f));
    throw UsageError("unknown family '" + o.family + "' (known: " + known + ")");
  }
  gpg::FamilyParams fp;
  fp.x = parse_flag("x", o.x);
  fp.y = parse_flag("y", o.y);
  fp.z = parse_flag("z", o.z);
  fp.lambda = parse_flag("lambda", o.lambda);
  fp.lambda_deg = parse_flag("lambda-deg", o.lambda_deg);
  fp.rho = parse_flag("rho", o.rho);
  fp.u = parse_flag("u", o.u);
  fp.log_a = o.a_sugar.empty() ? parse_flag("log-a", o.log_a) : base_sugar("a", o.a_sugar);
  fp.log_b = o.b_sugar.empty() ? parse_flag("log-b", o.log_b) : base_sugar("b", o.b_sugar);
  fp.log_c = parse_flag("log-c", o.log_c);
  fp.k = o.k;
  fp.order = o.order;
  fp.r = o.r;
  const std::size_t top = n_max_of(o);
  const auto series = gpg::family_series(*id, fp, top);

  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n <= top; ++n) os << n << "," << series.egf(n).str() << "\n";
    emit(o, os.str());
    return kExitPass;
  }
  ordered_json params;
  params["family"] = o.family;
  params["n_max"] = top;
  add_point(params, fp.x, fp.y, fp.z);
  params["lambda"] = fp.lambda.str();
  params["lambda_deg"] = fp.lambda_deg.str();
  params["rho"] = fp.rho.str();
  params["u"] = fp.u.str();
  params["log_a"] = fp.log_a.str();
  params["log_b"] = fp.log_b.str();
  params["log_c"] = fp.log_c.str();
  params["k"] = fp.k;
  params["order"] = fp.order;
  params["r"] = fp.r;
  ordered_json results = ordered_json::array();
  for (std::size_t n = 0; n <= top; ++n) results.push_back({{"n", n}, {"value", series.egf(n).str()}});
  ordered_json j;
  j["command"] = "table";
  j["params"] = params;
  j["results"] = results;
  emit(o, dump(j));
  return kExitPass;
}

int cmd_poly(const Options& o) {
  const gpg::GParams p = gparams(o);
  p.validate();
  const gpg::TriPoly poly = gpg::poly_expand(o.n, p);
  // std::map order is lexicographic; regroup by total degree first.
  std::vector<std::pair<gpg::Exponent, Rational>> terms(poly.terms().begin(), poly.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const unsigned dl = l.first[0] + l.first[1] + l.first[2];
    const unsigned dr = r.first[0] + r.first[1] + r.first[2];
    return dl < dr;
  });
  std::optional<bool> match;
  if (o.oracle) match = (gpg::ghat_poly(o.n, p) == poly);

  if (o.format == "csv") {
    std::ostringstream os;
    os << "i,j,l,coeff\n";
    for (const auto& [e, c] : terms) os << e[0] << "," << e[1] << "," << e[2] << "," << c.str() << "\n";
    emit(o, os.str());
  } else {
    ordered_json results = ordered_json::array();
    for (const auto& [e, c] : terms) results.push_back({{"monomial", {e[0], e[1], e[2]}}, {"coeff", c.str()}});
    ordered_json j;
    j["command"] = "poly";
    j["n"] = o.n;
    j["params"] = gparams_json(p);
    j["results"] = results;
    if (match) j["oracle_match"] = *match;
    emit(o, dump(j));
  }
  return match.value_or(true) ? kExitPass : kExitFailure;
}

int emit_report(const Options& o, const std::string& command, ordered_json params, const gpg::VerifyReport& rep) {
  if (o.format == "csv") {
    std::ostringstream os;
    os << "label,n,oracle,closed_form,equal\n";
    for (const auto& c : rep.cases) {
      if (c.status != gpg::CaseStatus::checked) continue;
      os << '"' << c.label << "\"," << c.n << "," << c.oracle.str() << "," << c.closed_form.str() << ","
         << (c.equal ? "true" : "false") << "\n";
    }
    emit(o, os.str());
  } else {
    ordered_json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["report"] = gpg::to_json(rep);
    emit(o, dump(j));
  }
  std::cerr << rep.suite << ": " << rep.cases.size() << " cases, " << rep.failures() << " failures, "
            << rep.skipped() << " skipped, " << rep.deviations.size() << " deviations\n";
  return rep.passed() ? kExitPass : kExitFailure;
}

int cmd_verify(const Options& o) {
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  const std::size_t top = n_max_of(o);
  const auto rep = gpg::run_suite(o.suite, top, o.trials, o.seed);
  ordered_json params{{"suite", o.suite}, {"n_max", top}, {"trials", o.trials}, {"seed", o.seed}};
  return emit_report(o, "verify", std::move(params), rep);
}

int cmd_reduce(const Options& o) {
  if (o.item < 1 || o.item > 6) throw UsageError("--item must be in 1..6");
  const gpg::GParams p = gparams(o);
  const Rational x = parse_flag("x", o.x), y = parse_flag("y", o.y), z = parse_flag("z", o.z);
  const std::size_t top = n_max_of(o);
  auto rep = gpg::reduce_check(o.item, p, x, y, z, top);
  rep.suite = "reduce";
  ordered_json params = gparams_json(p);
  add_point(params, x, y, z);
  params["item"] = o.item;
  params["n_max"] = top;
  return emit_report(o, "reduce", std::move(params), rep);
}

void add_gparams(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "polylogarithm index k (>= 1)");
  sub->add_option("--alpha", o.alpha, "order alpha (>= 1)");
  sub->add_option("--lambda", o.lambda, "Apostol multiplier lambda");
  sub->add_option("--rho", o.rho, "degeneracy parameter");
  sub->add_option("--u", o.u, "Frobenius parameter u (u != lambda)");
  auto* la = sub->add_option("--log-a", o.log_a, "ln a");
  auto* lb = sub->add_option("--log-b", o.log_b, "ln b");
  sub->add_option("--a", o.a_sugar, "base a: 1 or e")->excludes(la);
  sub->add_option("--b", o.b_sugar, "base b: e or 1")->excludes(lb);
}

void add_point(CLI::App* sub, Options& o) {
  sub->add_option("--x", o.x, "x coordinate");
  sub->add_option("--y", o.y, "y coordinate");
  sub->add_option("--z", o.z, "z coordinate");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact degenerate Hermite-based Apostol-Frobenius-type poly-Genocchi polynomials"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "value at a point");
  eval->add_option("--n", o.n, "index n")->required();
  add_gparams(eval, o);
  add_point(eval, o);
  add_output(eval, o);

  auto* table = app.add_subcommand("table", "rows n = 0..n-max of a registry family");
  table->add_option("--family", o.family, "family identifier")->required();
  table->add_option("--n-max", o.n_max, "last index (default: GPG_DEFAULT_ORDER or 10)");
  add_gparams(table, o);
  add_point(table, o);
  table->add_option("--lambda-deg", o.lambda_deg, "degeneracy of the Carlitz-style families");
  table->add_option("--log-c", o.log_c, "ln c");
  table->add_option("--r", o.r, "shift r");
  table->add_option("--order", o.order, "power applied to the base quotient");
  add_output(table, o);

  auto* poly = app.add_subcommand("poly", "polynomial in x, y, z");
  poly->add_option("--n", o.n, "index n")->required();
  poly->add_flag("--oracle", o.oracle, "cross-check against the series oracle");
  add_gparams(poly, o);
  add_output(poly, o);

  auto* verify = app.add_subcommand("verify", "run a certification suite");
  verify->add_option("--suite", o.suite, "suite name")->required();
  verify->add_option("--n-max", o.n_max, "largest index (default: GPG_DEFAULT_ORDER or 10)");
  verify->add_option("--trials", o.trials, "random cases per check");
  verify->add_option("--seed", o.seed, "sampler seed");
  add_output(verify, o);

  auto* reduce = app.add_subcommand("reduce", "check one special-case reduction");
  reduce->add_option("--item", o.item, "reduction 1..6")->required();
  reduce->add_option("--n-max", o.n_max, "series order (default: GPG_DEFAULT_ORDER or 10)");
  add_gparams(reduce, o);
  add_point(reduce, o);
  add_output(reduce, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*table) return cmd_table(o);
    if (*poly) return cmd_poly(o);
    if (*verify) return cmd_verify(o);
    if (*reduce) return cmd_reduce(o);
  } catch (const gpg::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
