#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pa {

struct CheckResult {
  std::string check;
  bool pass = false;
  std::optional<std::string> witness; // JSON text
};

struct Report {
  std::vector<CheckResult> checks;
  // ideal-closure transcript; empty for plain reports
  std::vector<long> rounds;
  std::optional<long> dim;
  std::optional<long> kernel_dim;

  void add(std::string check, bool pass, std::optional<std::string> witness = std::nullopt) {
    checks.push_back({std::move(check), pass, std::move(witness)});
  }
  void append(const Report &other, const std::string &prefix = {});
  bool pass() const;
  std::vector<std::string> failures() const;
};

} // namespace pa
