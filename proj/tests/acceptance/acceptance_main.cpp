// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-cli>
#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "gpg/rational.hpp"
#include "gpg/theorems.hpp"

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string summary(const gpg::VerifyReport& r) {
  return std::to_string(r.cases.size()) + " cases, " + std::to_string(r.failures()) + " failures";
}

Outcome suite(const std::string& name, std::size_t n_max, int trials, std::uint64_t seed) {
  const auto r = gpg::run_suite(name, n_max, trials, seed);
  return {r.passed() && !r.cases.empty(), summary(r)};
}

Outcome timed(const std::function<Outcome()>& body, double limit_s) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail += ", " + std::to_string(secs) + " s (limit " + std::to_string(static_cast<int>(limit_s)) + " s)";
  o.ok = o.ok && secs < limit_s;
  return o;
}

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 8192> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

/// Every string field named like a rational value must re-parse to itself.
void collect_rationals(const nlohmann::json& j, std::size_t& total, std::size_t& bad) {
  static const std::set<std::string> keys{"value", "coeff", "oracle", "closed_form", "lambda", "rho",
                                          "u", "log_a", "log_b", "x", "y", "z"};
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (keys.count(it.key()) && it.value().is_string()) {
        ++total;
        const std::string s = it.value();
        const auto r = gpg::Rational::try_parse(s);
        if (!r || r->str() != s) ++bad;
      } else {
        collect_rationals(it.value(), total, bad);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) collect_rationals(e, total, bad);
  }
}

Outcome cli_contract(const std::string& cli) {
  const auto first = run_cli(cli, "verify --suite all --seed 42");
  const auto second = run_cli(cli, "verify --suite all --seed 42");
  if (first.first != 0) return {false, "verify --suite all exited " + std::to_string(first.first)};
  if (first.second != second.second) return {false, "outputs differ between runs"};
  std::size_t total = 0, bad = 0;
  for (const std::string args : {"eval --n 5 --k 2 --alpha 2 --rho 1/3 --lambda -2 --u 1/2 --x 3/4 --y -1 --z 2",
                                 "table --family deg_poly_euler --n-max 6 --k 2 --rho 1/2 --x 1/3",
                                 "poly --n 4 --k 3 --rho -1/2 --lambda 2 --u -1/3 --oracle"}) {
    const auto a = run_cli(cli, args);
    const auto b = run_cli(cli, args);
    if (a.first != 0 || a.second != b.second) return {false, "'" + args + "' failed or not reproducible"};
    collect_rationals(nlohmann::json::parse(a.second), total, bad);
  }
  collect_rationals(nlohmann::json::parse(first.second), total, bad);
  return {bad == 0 && total > 0,
          "byte-identical, " + std::to_string(total) + " rationals, " + std::to_string(bad) + " failed round-trip"};
}

Outcome explicit_criterion() {
  const auto r = gpg::run_suite("explicit", 10, 20, 42);
  std::set<std::string> theorems;
  for (const auto& d : r.deviations) theorems.insert(d.theorem);
  std::size_t remark_cases = 0;
  for (const auto& c : r.cases)
    if (c.label == "explicit_higher(alpha=1) = explicit_order1") ++remark_cases;
  const bool ok = r.passed() && remark_cases > 0 && theorems.count("explicit_order1") &&
                  theorems.count("explicit_higher");
  return {ok, summary(r) + ", " + std::to_string(r.deviations.size()) + " deviations logged"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"zero prefix", [] { return timed([] { return suite("zero_prefix", 12, 20, 42); }, 10); }},
      {"degenerate exp/log inverse pair", [] { return suite("inverse_pair", 16, 1, 42); }},
      {"polyexponential identities", [] { return suite("polyexp", 16, 1, 42); }},
      {"B-coefficients", [] { return suite("bcoef", 10, 1, 42); }},
      {"Eulerian pinning", [] { return suite("eulerian", 12, 1, 42); }},
      {"Whitney reconstruction", [] { return suite("whitney", 8, 20, 42); }},
      {"degenerate Stirling limits", [] { return suite("stirling", 10, 20, 42); }},
      {"explicit formulas", [] { return timed(explicit_criterion, 60); }},
      {"addition formula", [] { return suite("addition", 10, 20, 42); }},
      {"polynomial form", [] { return suite("poly", 8, 20, 42); }},
      {"special-case reductions", [] { return suite("reductions", 10, 20, 42); }},
      {"classical Genocchi anchor", [] { return suite("anchor", 8, 1, 42); }},
      {"CLI contract", [&cli] { return cli_contract(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
