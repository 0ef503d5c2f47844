#pragma once

#include <string>
#include <vector>

#include "pa/report.hpp"

namespace pa::suites {

struct Options {
  // run the optional (4,3) principal-generation closure
  bool large_closure = false;
};

struct Criterion {
  int id;
  std::string title;
};

const std::vector<Criterion> &criteria();
Report run_criterion(int id, const Options &options = {});

// Every k <= 2 suite; a few seconds.
Report quick();
// All criteria concatenated, each check prefixed with "[i] ".
Report full(const Options &options = {});

} // namespace pa::suites
