#include <doctest.h>

#include "eisenfun/check.hpp"

using namespace eisenfun;

TEST_CASE("identity suite passes on a correct build") {
  const auto results = run_identity_suite();
  CHECK(results.size() >= 30);
  int expected = 0;
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.passed());
    CHECK_FALSE(r.errored);
    if (r.expected_failure) ++expected;
  }
  CHECK(expected == 3);
  CHECK(all_passed(results));
}

TEST_CASE("tolerance override reaches ordinary checks only") {
  SuiteOptions opts;
  opts.tolerance_override = 1e-16;
  const auto results = run_identity_suite(opts);
  CHECK_FALSE(all_passed(results));
  for (const auto& r : results) {
    if (r.expected_failure) {
      CHECK(r.passed());
    } else {
      CHECK(r.tolerance == 1e-16);
    }
  }
}

TEST_CASE("CheckResult pass logic") {
  CheckResult r{"x", 1.0, 0.5, false, false, ""};
  CHECK_FALSE(r.passed());
  r.expected_failure = true;
  CHECK(r.passed());
  r.errored = true;
  CHECK_FALSE(r.passed());
}
