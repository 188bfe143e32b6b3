#ifndef GPG_REPORT_HPP
#define GPG_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpg/rational.hpp"

namespace gpg {

enum class CaseStatus {
  checked,       // both sides evaluated; see `equal`
  precondition,  // the case violates a precondition (e.g. lambda = u); not a failure
};

struct CaseRecord {
  std::string label;
  std::string params;
  std::size_t n = 0;
  Rational oracle;
  Rational closed_form;
  bool equal = false;
  CaseStatus status = CaseStatus::checked;
  std::string note;
};

/// A closed form that is certified in a corrected reading. `printed` and
/// `reconstructed` cite the index or argument that differs.
struct Deviation {
  std::string theorem;
  std::string printed;
  std::string reconstructed;
  std::string note;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::vector<Deviation> deviations;

  std::size_t failures() const;
  std::size_t skipped() const;
  bool passed() const { return failures() == 0; }

  void add(CaseRecord c) { cases.push_back(std::move(c)); }
  /// Records a comparison; returns whether the two sides agree.
  bool check(std::string label, std::string params, std::size_t n, const Rational& oracle,
             const Rational& closed_form);
  /// Adds a deviation unless an identical entry is already present.
  void add_deviation(const Deviation& d);
  /// Appends the cases and deviations of another report.
  void merge(const VerifyReport& other);
};

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace gpg

#endif  // GPG_REPORT_HPP
