#include <doctest.h>

#include "../fixtures.hpp"
#include "splitquat/verify.hpp"

using namespace splitquat;
using fixtures::qt;

namespace {

void require_status(const VerificationReport& r, const char* id, CheckStatus s) {
  const CheckResult* c = r.find(id);
  REQUIRE(c != nullptr);
  INFO(id);
  for (const auto& f : c->failures) INFO(f);
  CHECK(c->status == s);
}

}  // namespace

TEST_CASE("example 2 passes every check exactly") {
  VerificationReport r = verify_linkage(build_linkage(fixtures::example2()));
  CHECK(r.passed());
  for (const auto& c : r.checks) {
    INFO(c.id);
    CHECK(c.status == CheckStatus::Passed);
    CHECK(c.comparisons > 0);
    CHECK(c.max_residual == 0.0);
  }
  CHECK(r.checks.size() == 6);
}

TEST_CASE("example 1 passes the theorems and skips the null statements") {
  VerificationReport r = verify_linkage(build_linkage(fixtures::example1()));
  CHECK(r.passed());
  require_status(r, "theorem1", CheckStatus::Passed);
  require_status(r, "theorem2", CheckStatus::Passed);
  require_status(r, "corollary1", CheckStatus::Skipped);
  require_status(r, "corollary2", CheckStatus::Skipped);
  require_status(r, "corollary3", CheckStatus::Skipped);
}

TEST_CASE("float backend agrees within the tolerance") {
  VerificationReport r = verify_linkage(build_linkage(fixtures::example2().to_backend(Backend::Float)));
  CHECK(r.passed());
  for (const auto& c : r.checks) CHECK(c.max_residual < 1e-9);
}

TEST_CASE("custom sample parameters") {
  VerifyOptions o;
  for (long t = -10; t <= 10; ++t) o.samples.push_back(Scalar::rational(t, 3));
  VerificationReport r = verify_linkage(build_linkage(fixtures::example2()), o);
  CHECK(r.passed());
}

TEST_CASE("a tampered linkage fails") {
  FourBar fb = build_linkage(fixtures::example2());
  std::swap(fb.legs[0].fixed_joint, fb.legs[1].fixed_joint);
  VerificationReport r = verify_linkage(fb);
  CHECK_FALSE(r.passed());
  require_status(r, "theorem1", CheckStatus::Failed);
}
