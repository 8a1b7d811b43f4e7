#include <doctest.h>

#include <set>

#include "properties.hpp"

using namespace liftforge;

TEST_CASE("randomized property suites") {
  for (const props::Outcome& o : props::run_all(20240601, 200)) {
    INFO(o.name << " first failure: " << o.first_failure);
    CHECK(o.cases >= 200);
    CHECK(o.failures == 0);
  }
}

TEST_CASE("string orbits and rule canonicalization count the same classes") {
  for (int k = 4; k <= 9; ++k) {
    const auto strings = enumerate_conserved(k, {false, ClassCountMethod::StringOrbits, 1});
    const auto rules = enumerate_conserved(k, {false, ClassCountMethod::RuleCanonical, 1});
    CHECK(strings.classes == rules.classes);
  }
}
