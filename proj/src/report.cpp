#include "gpg/report.hpp"

#include <algorithm>

namespace gpg {

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) {
    return c.status == CaseStatus::checked && !c.equal;
  }));
}

std::size_t VerifyReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseRecord& c) { return c.status != CaseStatus::checked; }));
}

bool VerifyReport::check(std::string label, std::string params, std::size_t n, const Rational& oracle,
                         const Rational& closed_form) {
  const bool eq = oracle == closed_form;
  cases.push_back(CaseRecord{std::move(label), std::move(params), n, oracle, closed_form, eq,
                             CaseStatus::checked, {}});
  return eq;
}

void VerifyReport::add_deviation(const Deviation& d) {
  if (std::find(deviations.begin(), deviations.end(), d) == deviations.end()) deviations.push_back(d);
}

void VerifyReport::merge(const VerifyReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  for (const auto& d : other.deviations) add_deviation(d);
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  using nlohmann::ordered_json;
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) {
    ordered_json j;
    j["label"] = c.label;
    j["params"] = c.params;
    j["n"] = c.n;
    if (c.status == CaseStatus::checked) {
      j["oracle"] = c.oracle.str();
      j["closed_form"] = c.closed_form.str();
      j["equal"] = c.equal;
    } else {
      j["status"] = "precondition";
      j["note"] = c.note;
    }
    cases.push_back(std::move(j));
  }
  ordered_json devs = ordered_json::array();
  for (const auto& d : report.deviations)
    devs.push_back({{"theorem", d.theorem}, {"printed", d.printed}, {"reconstructed", d.reconstructed},
                    {"note", d.note}});
  ordered_json out;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["case_count"] = report.cases.size();
  out["failures"] = report.failures();
  out["skipped"] = report.skipped();
  out["cases"] = std::move(cases);
  out["deviations"] = std::move(devs);
  return out;
}

}  // namespace gpg
