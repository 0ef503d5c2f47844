#include "pa/report.hpp"

namespace pa {

void Report::append(const Report &other, const std::string &prefix) {
  for (const auto &c : other.checks)
    checks.push_back({prefix + c.check, c.pass, c.witness});
}

bool Report::pass() const {
  for (const auto &c : checks)
    if (!c.pass)
      return false;
  return true;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto &c : checks)
    if (!c.pass)
      out.push_back(c.check);
  return out;
}

} // namespace pa
