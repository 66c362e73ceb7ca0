#include <doctest.h>

#include <set>

#include "cubical/error.hpp"
#include "cubical/suites.hpp"

using namespace cubical;

TEST_CASE("the boxcat suite passes") {
  const SuiteReport r = run_suite("boxcat");
  CHECK(r.suite == "boxcat");
  CHECK(r.checks.size() == 3);
  for (const auto& c : r.checks) {
    CAPTURE(c.id);
    CAPTURE(c.witness);
    CHECK(c.status == Status::pass);
  }
  CHECK(r.seconds >= 0);
}

TEST_CASE("the full report lists every registered check once, sorted") {
  SuiteBounds b;
  b.k = 2;
  const SuiteReport r = run_suite("all", b);
  REQUIRE(r.checks.size() == registered_checks().size());
  CHECK(registered_checks().size() == 19);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(r.checks[i].id == registered_checks()[i].id);
    CHECK(ids.insert(r.checks[i].id).second);
    CHECK(r.checks[i].status == Status::pass);
  }
  std::set<std::string> suites;
  for (const auto& c : registered_checks()) suites.insert(c.suite);
  for (const auto& name : suite_names()) {
    if (name != "all") CHECK(suites.count(name) == 1);
  }
  CHECK(all_pass(r.checks));
}

TEST_CASE("a corrupted quotient cube is caught with its witness cell") {
  CHECK_FALSE(validate(corrupted_q2(3)).empty());
  SuiteBounds b;
  b.corrupt_q = true;
  const SuiteReport r = run_suite("coreflection", b);
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.id != "coreflection.counit-mono") continue;
    found = true;
    CHECK(c.status == Status::fail);
    CHECK(c.witness.find("Q^2 (corrupted)") != std::string::npos);
    CHECK(c.witness.find("at cell '") != std::string::npos);
  }
  CHECK(found);
  CHECK_FALSE(all_pass(r.checks));
}

TEST_CASE("reports are deterministic and independent of threading") {
  SuiteBounds par;
  SuiteBounds ser;
  ser.parallel = false;
  const SuiteReport a = run_suite("qshape", par);
  const SuiteReport b = run_suite("qshape", ser);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
}

TEST_CASE("unknown names and bad bounds are rejected") {
  CHECK_THROWS_AS(run_suite("nope"), PreconditionError);
  CHECK_THROWS_AS(run_check("boxcat.nope"), PreconditionError);
  SuiteBounds b;
  b.k = 9;
  CHECK_THROWS_AS(run_suite("model", b), PreconditionError);
  CHECK(run_check("qshape.q2-census").status == Status::pass);
}
