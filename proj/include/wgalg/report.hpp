#pragma once

// Check reports shared by the tensor and certificate layers. Text output ends
// with one machine-readable trailer line per check: "CHECK <name> <OUTCOME>".

#include <string>
#include <utility>
#include <vector>

namespace wgalg {

enum class Outcome { kPass, kFail, kInconclusive };

const char* outcome_name(Outcome o);  // "PASS", "FAIL", "INCONCLUSIVE"

/// FAIL dominates INCONCLUSIVE, which dominates PASS.
Outcome combine(Outcome a, Outcome b);

struct Check {
  Check() = default;
  Check(std::string name_, std::string title_)
      : name(std::move(name_)), title(std::move(title_)) {}

  std::string name;   // trailer token, no spaces
  std::string title;  // human heading, e.g. "Z4 (corner criterion)"
  Outcome outcome = Outcome::kPass;
  std::vector<std::string> details;

  /// Folds one sub-result in; `detail` is recorded unless the sub-result passed.
  void note(Outcome sub, const std::string& detail);
  void info(const std::string& line) { details.push_back(line); }
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  Outcome overall() const;
  Check* find(const std::string& name);
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  std::string to_text() const;
  std::string to_json_text() const;
};

/// 0 all pass, 1 any fail, 2 inconclusive without failures.
int exit_code(Outcome o);

}  // namespace wgalg
