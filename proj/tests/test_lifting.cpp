#include <doctest.h>

#include <random>

#include "liftforge/exprlang.hpp"
#include "liftforge/families.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

Rule patt() { return compile(parse_landscape("0*10")); }
Rule anf_rule(const char* text) { return rule_from_table(parse_anf_text(text)); }

}  // namespace

TEST_CASE("induced map agrees with the naive oracle") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const Rule r = oracle::random_rule(rng, 1 + static_cast<int>(rng() % 6));
    const int n = std::max(r.k(), 2 + static_cast<int>(rng() % 10));
    const InducedMap m = induce(r, n);
    for (std::uint64_t x = 0; x < m.size(); ++x) {
      REQUIRE(m(x) == oracle::apply(r, n, x));
      REQUIRE(m.table()[x] == m(x));
    }
  }
}

TEST_CASE("identity and the rotation") {
  for (int n = 1; n <= 10; ++n) {
    const InducedMap m = induce(identity_rule(), n);
    for (std::uint64_t x = 0; x < m.size(); ++x) CHECK(m(x) == x);
  }
  CHECK(rotate(0b0001, 4) == 0b0010);
  CHECK(rotate(0b1000, 4) == 0b0001);
}

TEST_CASE("bijectivity scans") {
  CHECK(oracle::bijective(patt(), 4));
  for (int n = 4; n <= 16; ++n) CHECK(is_lifting(patt(), n));
  const Rule x = anf_rule("x1 ^ x2");
  CHECK_FALSE(is_lifting(x, 8));
  const InducedMap m = induce(x, 6);
  for (std::uint64_t v = 0; v < 64; ++v) CHECK(m(v) == m(v ^ 63));
  const Rule ho = eval_expr(parse_expr("(1*001)o(1*01)"));
  for (int n = 5; n <= 14; ++n) CHECK(is_lifting(ho, n));
  CHECK_THROWS(is_lifting(patt(), 30));
}

TEST_CASE("exact properness") {
  const PropernessVerdict p = decide_proper(patt());
  CHECK(p.proper);
  CHECK_FALSE(p.witness.has_value());

  const Rule x = anf_rule("x1 ^ x2");
  const PropernessVerdict v = decide_proper(x);
  CHECK_FALSE(v.proper);
  REQUIRE(v.witness.has_value());
  CHECK(witness_replays(x, *v.witness));

  const PropernessVerdict s = decide_proper(patt(), {ProperMethod::FiniteScan, 16, 12});
  CHECK(s.proper);
  CHECK(s.method == ProperMethod::FiniteScan);
  CHECK(s.scanned_to == 12);
  CHECK(to_json(p).find("\"decision\":\"proper\"") != std::string::npos);
}

TEST_CASE("pair graph agrees with bijectivity on small lengths") {
  std::mt19937_64 rng(7);
  int proper = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Rule r = oracle::random_rule(rng, 2 + static_cast<int>(rng() % 3));
    const PropernessVerdict v = decide_proper(r);
    bool all = true;
    for (int n = r.k(); n <= 12 && all; ++n) all = oracle::bijective(r, n);
    if (v.proper) {
      ++proper;
      CHECK(all);
    } else {
      REQUIRE(v.witness.has_value());
      CHECK(witness_replays(r, *v.witness));
    }
  }
  // Random tables are almost never proper; compositions of conserved
  // landscapes always are.
  const std::vector<Landscape> pool = conserved_pool(4, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const Rule r = compose(compile(pool[rng() % pool.size()]), compile(pool[rng() % pool.size()]));
    if (r.k() > 9) continue;
    CHECK(decide_proper(r).proper);
    for (int n = r.k(); n <= 12; ++n) CHECK(oracle::bijective(r, n));
    ++proper;
  }
  CHECK(proper > 20);
}

TEST_CASE("composition reproduces the diameter-5 example") {
  const Rule h = compose(compile(parse_landscape("1*001")), compile(parse_landscape("1*01")));
  CHECK(h.k() == 5);
  const Rule expected = anf_rule("x2 ^ x1*(x4*(x3^1) ^ (x4^1)*x5*(x2^x3^1))");
  CHECK(h == expected);
}

TEST_CASE("composition with the identity") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Rule r = oracle::random_rule(rng, 1 + static_cast<int>(rng() % 6));
    CHECK(compose(identity_rule(), r) == r);
    CHECK(compose(r, identity_rule()) == r);
    CHECK(compose(r, identity_rule().with_shift(3)).shift() == r.shift() + 3);
  }
}

TEST_CASE("expansion") {
  const Rule f3 = expand(patt(), 3);
  CHECK(f3.k() == 10);
  for (std::uint64_t v = 0; v < 1024; ++v) {
    const std::uint64_t w = (v & 1) | ((v >> 3) & 1) << 1 | ((v >> 6) & 1) << 2 | ((v >> 9) & 1) << 3;
    CHECK(f3(v) == patt()(w));
  }
  CHECK(expand(patt(), 1) == patt());
  CHECK_THROWS(expand(patt(), 0));
}

TEST_CASE("iterate order") {
  const IterateOrder p = iterate_order(patt(), 8);
  CHECK(p.status == IterateOrder::Status::Found);
  CHECK(p.order == 2);
  const IterateOrder id = iterate_order(identity_rule(), 4);
  CHECK(id.status == IterateOrder::Status::Found);
  CHECK(id.order == 1);
  const IterateOrder c3 = iterate_order(build_chain({3}), 6);
  CHECK(c3.status == IterateOrder::Status::Found);
  CHECK(3 % c3.order == 0);
  CHECK(iterate_order(anf_rule("x1 ^ x2"), 3, 8).status != IterateOrder::Status::Found);
  CHECK(is_pure_shift(power(patt(), 2)));
}

TEST_CASE("divisor check") {
  CHECK(divisor_check(patt(), 12, 6));
  CHECK(divisor_check(anf_rule("x1 ^ x2"), 8, 4));
}
