#include <doctest.h>

#include <random>

#include "liftforge/diffunif.hpp"
#include "liftforge/exprlang.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "oracles.hpp"

using namespace liftforge;

namespace {

Rule patt() { return compile(parse_landscape("0*10")); }

std::uint64_t naive_du(const Rule& r, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> image(size);
  for (std::uint64_t x = 0; x < size; ++x) image[x] = oracle::apply(r, n, x);
  std::uint64_t best = 0;
  std::vector<std::uint64_t> count(size);
  for (std::uint64_t a = 1; a < size; ++a) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint64_t x = 0; x < size; ++x) best = std::max(best, ++count[image[x ^ a] ^ image[x]]);
  }
  return best;
}

}  // namespace

TEST_CASE("dyadic values") {
  CHECK(Dyadic::make(6, 0).to_string() == "6");
  CHECK(Dyadic::make(233, 1).to_string() == "116.5");
  CHECK(Dyadic::make(233, 2).to_string() == "58.25");
  CHECK(Dyadic::make(8, 2) == Dyadic::make(2, 0));
  CHECK(Dyadic::make(1, 1) < Dyadic::make(1, 0));
  CHECK(scaled_du(6, 4) == Dyadic::make(192, 0));
  CHECK(scaled_du(14, 5) == Dyadic::make(224, 0));
  CHECK(scaled_du(216, 9) == Dyadic::make(216, 0));
  CHECK(scaled_du(1728, 12).to_string() == "216");
  CHECK(scaled_du(233, 10).to_string() == "116.5");
}

TEST_CASE("patt") {
  CHECK(ddt_max(patt(), 4).du_raw == 6);
  CHECK(ddt_max(patt(), 5).du_raw == 14);
  const DdtMax m = ddt_max(patt(), 6);
  const InducedMap f = induce(patt(), 6);
  std::uint64_t hits = 0;
  for (std::uint64_t x = 0; x < 64; ++x) hits += (f(x ^ m.a) ^ f(x)) == m.b;
  CHECK(hits == m.du_raw);
  CHECK(m.a != 0);
}

TEST_CASE("identity") {
  for (int n = 1; n <= 10; ++n) CHECK(ddt_max(identity_rule(), n).du_raw == (std::uint64_t{1} << n));
}

TEST_CASE("necklace reduction agrees with the full table") {
  std::mt19937_64 rng(17);
  DdtOptions full;
  full.necklace_reduction = false;
  for (int trial = 0; trial < 30; ++trial) {
    const Rule r = oracle::random_rule(rng, 2 + static_cast<int>(rng() % 4));
    for (int n = std::max(r.k(), 3); n <= 9; ++n) {
      const std::uint64_t reduced = ddt_max(r, n).du_raw;
      CHECK(reduced == ddt_max(r, n, full).du_raw);
      if (n <= 7) CHECK(reduced == naive_du(r, n));
    }
  }
}

TEST_CASE("du of bijective maps is even") {
  for (const Landscape& l : conserved_pool(4, 6)) {
    const Rule r = compile(l);
    for (int n = r.k(); n <= 8; ++n) {
      const std::uint64_t d = ddt_max(r, n).du_raw;
      CHECK(d % 2 == 0);
      CHECK(d >= 2);
    }
  }
}

TEST_CASE("profiles") {
  const DuReport rep = du_profile(eval_expr(parse_expr("(0-★100)∘(0-★110)")), 6, 12);
  const std::uint64_t raw[] = {24, 56, 112, 216, 480, 864, 1728};
  REQUIRE(rep.entries.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(rep.entries[i].n == static_cast<int>(6 + i));
    CHECK(rep.entries[i].ddt.du_raw == raw[i]);
  }
  // 480/2^10 breaks the run of equal ratios at n = 10..12.
  CHECK_FALSE(rep.stabilized);
  CHECK(rep.running_max == Dyadic::make(480, 10));
  CHECK(rep.running_max_at == 10);
  CHECK_THROWS(du_profile(patt(), 4, 20));
  CHECK(du_profile(patt(), 3, 6).entries.front().n == 4);
}

TEST_CASE("scaled tables") {
  const DuTable t = du_scaled_table({parse_expr("(00★10)∘(0★110)∘(0★10)"), parse_expr("(0★110)∘(0★10)")}, 5, 10);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].k == 6);
  CHECK(t.rows[0].degree == 4);
  CHECK_FALSE(t.rows[0].scaled[0].has_value());
  const int deg4[] = {144, 128, 132, 120, 117};
  for (int i = 0; i < 5; ++i) CHECK(*t.rows[0].scaled[static_cast<std::size_t>(i + 1)] == Dyadic::make(deg4[i], 0));
  const int k5[] = {128, 144, 144, 136, 132, 132};
  for (int i = 0; i < 6; ++i) CHECK(*t.rows[1].scaled[static_cast<std::size_t>(i)] == Dyadic::make(k5[i], 0));
  CHECK(t.to_csv().find("144") != std::string::npos);
  CHECK(t.to_text().find("117") != std::string::npos);
  CHECK(t.to_json().find("\"deg\":4") != std::string::npos);
}
