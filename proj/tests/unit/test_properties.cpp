#include <doctest.h>

#include <cstdlib>

#include "isored/proptest.hpp"

using namespace isored;

TEST_CASE("randomized invariants") {
  int cases = 60;
  if (const char* env = std::getenv("ISORED_PROPTEST_CASES")) cases = std::atoi(env);
  for (const auto& spec : all_properties()) {
    const auto r = run_property(spec, cases, 20260101);
    CAPTURE(r.name);
    CHECK_MESSAGE(r.ok(), format_result(r));
  }
}

TEST_CASE("property runner") {
  const PropertySpec always_fails{"demo.fails", [](Rng&) -> std::optional<std::string> { return "nope"; }};
  const auto r = run_property(always_fails, 5, 1);
  CHECK(r.cases == 5);
  CHECK(r.failures == 5);
  CHECK(r.first_failure == "case 0: nope");
  const PropertySpec throws{"demo.throws", [](Rng&) -> std::optional<std::string> { throw std::runtime_error("x"); }};
  CHECK(run_property(throws, 1, 1).first_failure == "case 0: exception: x");
  CHECK(run_properties(3, 1, "ratfun.").size() == 5);
  CHECK_THROWS(property("no.such"));
}
