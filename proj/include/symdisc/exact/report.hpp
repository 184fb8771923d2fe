#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace symdisc::exact {

struct CheckResult {
  std::string name;
  std::string statement;
  bool passed = false;
  std::string detail;
};

/// Ordered proof log; one entry per check.
class VerificationReport {
 public:
  explicit VerificationReport(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string name, std::string statement, bool passed, std::string detail = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void append(const VerificationReport& other);

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  bool all_passed() const;
  std::size_t passed_count() const;
  std::vector<std::string> failures() const;

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

}  // namespace symdisc::exact
