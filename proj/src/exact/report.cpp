#include "symdisc/exact/report.hpp"

#include <algorithm>
#include <sstream>

namespace symdisc::exact {

void VerificationReport::add(std::string name, std::string statement, bool passed, std::string detail) {
  checks_.push_back({std::move(name), std::move(statement), passed, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; }));
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  if (!title_.empty()) out << "# " << title_ << '\n';
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " : " << c.statement;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << '\n';
  }
  for (const auto& n : notes_) out << "note: " << n << '\n';
  out << passed_count() << "/" << checks_.size() << " checks passed\n";
  return out.str();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["title"] = title_;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["notes"] = notes_;
  return j;
}

}  // namespace symdisc::exact
