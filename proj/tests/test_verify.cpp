#include <doctest.h>

#include "tes/verify.hpp"

// Drives every named sweep of the verification library at desk scale; the
// acceptance binary reruns the heavy ones at the full sizes.
TEST_CASE("verification suites pass at N=4") {
  tes::verify::Options opt;
  opt.n = 4;
  opt.cases = 5;
  opt.seed = 42;
  for (const char* suite : {"trees", "groups", "hopf", "duality"}) {
    CAPTURE(suite);
    for (const tes::verify::CheckResult& r : tes::verify::run_suite(suite, opt)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("alpha duality holds one order deeper") {
  tes::verify::CheckResult r = tes::verify::check_duality(tes::verify::GroupId::Alpha, 5, 4, 42);
  CAPTURE(r.detail);
  CHECK(r.pass);
}
