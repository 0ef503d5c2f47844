// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "suites.hpp"

int main(int argc, char **argv) {
  pa::suites::Options opt;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--override-size-guard"))
      opt.large_closure = true;
    else if (!std::strcmp(argv[i], "--verbose"))
      verbose = true;
    else {
      std::fprintf(stderr, "usage: pa_acceptance [--override-size-guard] [--verbose]\n");
      return 2;
    }
  }
  int failed = 0;
  for (const auto &c : pa::suites::criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    pa::Report r;
    std::string error;
    try {
      r = pa::suites::run_criterion(c.id, opt);
    } catch (const std::exception &e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && r.pass();
    failed += !ok;
    std::size_t bad = r.failures().size();
    std::printf("criterion %2d %-24s %s  (%zu checks, %zu failed, %.2fs)\n", c.id,
                c.title.c_str(), ok ? "PASS" : "FAIL", r.checks.size(), bad, secs);
    if (!error.empty())
      std::printf("    error: %s\n", error.c_str());
    std::size_t shown = 0;
    if (!ok || verbose)
      for (const auto &chk : r.checks) {
        if (!verbose && chk.pass)
          continue;
        if (!verbose && shown++ == 8) {
          std::printf("    ... %zu more failures (--verbose lists all)\n", bad - 8);
          break;
        }
        std::printf("    %s %s\n", chk.pass ? "ok  " : "FAIL", chk.check.c_str());
      }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(pa::suites::criteria().size()) - failed,
              pa::suites::criteria().size());
  return failed ? 1 : 0;
}
