#include <doctest.h>

#include "liftforge/families.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

FamilyViolation violation_of(int k, int j, std::vector<int> set) {
  try {
    symmetric_params(k, j, std::move(set));
  } catch (const FamilyError& e) {
    return e.violation();
  }
  FAIL("parameters accepted");
  return FamilyViolation::ChainRange;
}

}  // namespace

TEST_CASE("symmetric family examples") {
  const SymmetricFamilyParams p = symmetric_params(4, 2, {1, 4});
  CHECK(p.xi == 1);
  CHECK(p.t == 4);
  CHECK(p.r_exp == 2);
  CHECK_FALSE(p.mirrored);
  const Rule f = build_symmetric(p);
  CHECK(f == rule_from_table(parse_anf_text("x2 ^ x1*(x3^1)*x4")));
  CHECK(to_anf(f).to_string() == "x2 ^ x1*x4 ^ x1*x3*x4");
  CHECK(verify_order_claim(f, OrderClaim::power_of_two(p.r_exp)));

  const SymmetricFamilyParams q = symmetric_params(6, 3, {1, 6});
  CHECK(q.xi == 1);
  const Rule g = build_symmetric(q);
  CHECK(g == rule_from_table(parse_anf_text("x3 ^ (x4^1)*x1*x6")));
  CHECK(decide_proper(g).proper);
}

TEST_CASE("parameter validation") {
  CHECK(violation_of(6, 2, {1, 6}) == FamilyViolation::NoCongruentT);
  CHECK(violation_of(3, 2, {1, 3}) == FamilyViolation::DiameterRange);
  CHECK(violation_of(25, 2, {1, 25}) == FamilyViolation::DiameterRange);
  CHECK(violation_of(6, 1, {1, 6}) == FamilyViolation::PositionRange);
  CHECK(violation_of(6, 2, {1, 7}) == FamilyViolation::SetRange);
  CHECK(violation_of(6, 3, {1, 5, 6}) == FamilyViolation::Asymmetric);
  CHECK(violation_of(6, 3, {2, 5}) == FamilyViolation::MissingOne);
  CHECK(violation_of(6, 2, {1, 2, 5, 6}) == FamilyViolation::PositionInSet);
  CHECK(to_string(FamilyViolation::NoCongruentT) == "no-congruent-t");
  CHECK_THROWS_AS(build_chain({1}), FamilyError);
  CHECK_THROWS_AS(build_chain({13}), FamilyError);
}

TEST_CASE("mirrored positions build the reversed rule") {
  const SymmetricFamilyParams p = symmetric_params(6, 4, {1, 6});
  CHECK(p.mirrored);
  CHECK(build_symmetric(p) == reverse(build_symmetric(symmetric_params(6, 3, {1, 6}))));
  CHECK(build_symmetric(p) == symmetric_formula(6, 4, {1, 6}));
}

TEST_CASE("every symmetric rule up to diameter 8 is proper") {
  const auto all = enumerate_symmetric(4, 8, true);
  CHECK(all.size() == 22);
  for (const SymmetricFamilyParams& p : all) {
    const Rule f = build_symmetric(p);
    CHECK(f.k() == p.k);
    CHECK(decide_proper(f).proper);
    CHECK(verify_order_claim(f, OrderClaim::power_of_two(p.r_exp)));
  }
}

TEST_CASE("second iterate of the symmetric rule") {
  // F^2(x)_i = x_i ^ (x_{i+2Xi} ^ 1) prod_{l in S} x_{i-j+l} x_{i+Xi-j+l},
  // written here with 0-based positions relative to the window start.
  for (const SymmetricFamilyParams& p : enumerate_symmetric(4, 7, false)) {
    const Rule f = build_symmetric(p);
    for (int n = p.k + p.xi; n <= 12; ++n) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const std::uint64_t y = oracle::apply(f, n, oracle::apply(f, n, x));
        std::uint64_t expected = 0;
        for (int i = 0; i < n; ++i) {
          // Output bit i of F∘F sits at x_{i + 2(j-1)} in the offset-0 map.
          const int c = i + 2 * (p.j - 1);
          bool prod = !oracle::bit(x, (c + 2 * p.xi) % n);
          for (int l : p.set) {
            prod = prod && oracle::bit(x, (c - p.j + l) % n) && oracle::bit(x, (c + p.xi - p.j + l) % n);
          }
          if (oracle::bit(x, c % n) != prod) expected |= std::uint64_t{1} << i;
        }
        REQUIRE(y == expected);
      }
    }
  }
}

TEST_CASE("chain family") {
  CHECK(build_chain({2}) == compile(parse_landscape("0*10")));
  for (int r = 2; r <= 4; ++r) {
    const Rule f = build_chain({r});
    CHECK(f.k() == 2 * r);
    CHECK(decide_proper(f).proper);
    CHECK(verify_order_claim(f, OrderClaim::exact(r)));
  }
  const Rule c4 = build_chain({4});
  for (int n = 8; n <= 16; ++n) CHECK(is_lifting(c4, n));
  const Rule c5 = build_chain({5});
  for (int n = 10; n <= 16; ++n) CHECK(is_lifting(c5, n));
}
