#include "wgalg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace wgalg {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "PASS";
    case Outcome::kFail:
      return "FAIL";
    case Outcome::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::kFail || b == Outcome::kFail) return Outcome::kFail;
  if (a == Outcome::kInconclusive || b == Outcome::kInconclusive) {
    return Outcome::kInconclusive;
  }
  return Outcome::kPass;
}

void Check::note(Outcome sub, const std::string& detail) {
  outcome = combine(outcome, sub);
  if (sub != Outcome::kPass) {
    details.push_back(std::string(sub == Outcome::kFail ? "fail: " : "inconclusive: ") + detail);
  }
}

Outcome Report::overall() const {
  Outcome o = Outcome::kPass;
  for (const auto& c : checks) o = combine(o, c.outcome);
  return o;
}

Check* Report::find(const std::string& name) {
  for (auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Check* Report::find(const std::string& name) const {
  return const_cast<Report*>(this)->find(name);
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c && c->outcome == Outcome::kPass;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  for (const auto& c : checks) {
    out << (c.title.empty() ? c.name : c.title) << ": " << outcome_name(c.outcome) << "\n";
    for (const auto& d : c.details) out << "  " << d << "\n";
  }
  for (const auto& c : checks) out << "CHECK " << c.name << " " << outcome_name(c.outcome) << "\n";
  return out.str();
}

std::string Report::to_json_text() const {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["title"] = c.title.empty() ? c.name : c.title;
    j["outcome"] = outcome_name(c.outcome);
    j["details"] = c.details;
    doc["checks"].push_back(std::move(j));
  }
  doc["overall"] = outcome_name(overall());
  return doc.dump(2) + "\n";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return 0;
    case Outcome::kFail:
      return 1;
    case Outcome::kInconclusive:
      return 2;
  }
  return 1;
}

}  // namespace wgalg
