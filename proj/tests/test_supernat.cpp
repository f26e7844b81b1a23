#include <numeric>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "steinitz/descriptor_io.hpp"
#include "steinitz/supernatural.hpp"

using namespace steinitz;
using Map = SupernaturalNumber::ExponentMap;

namespace {

SupernaturalNumber sn(Map m, Exponent rest = Exponent{0}) { return SupernaturalNumber(std::move(m), rest); }
SupernaturalNumber nat(std::uint64_t n) { return SupernaturalNumber::from_natural(n); }
Exponent E(std::uint64_t n) { return Exponent{n}; }

}  // namespace

TEST_CASE("exponent order and arithmetic") {
  CHECK(E(0) < E(1));
  CHECK(E(1000000) < kInfinity);
  CHECK(std::min(E(3), kInfinity) == E(3));
  CHECK(std::max(E(3), kInfinity) == kInfinity);
  CHECK(add(E(2), E(3)) == E(5));
  CHECK(add(E(2), kInfinity) == kInfinity);
  CHECK(subtract(kInfinity, kInfinity) == E(0));
  CHECK(subtract(kInfinity, E(4)) == kInfinity);
  CHECK(subtract(E(4), E(1)) == E(3));
  CHECK_THROWS(kInfinity.value());
  CHECK_THROWS_AS(subtract(E(1), E(2)), std::domain_error);
}

TEST_CASE("from_natural") {
  CHECK(nat(1).exceptions().empty());
  CHECK(nat(1).rest() == E(0));
  CHECK(nat(12) == sn({{2, E(2)}, {3, E(1)}}));
  auto f = oracle::factor(360);
  Map expected;
  for (auto [q, e] : f) expected[q] = E(e);
  CHECK(nat(360).exceptions() == expected);
  CHECK_THROWS(nat(0));
}

TEST_CASE("construction validates and normalises") {
  CHECK_THROWS_AS(sn({{4, E(1)}}), std::invalid_argument);
  auto s = sn({{2, E(1)}, {3, E(1)}, {5, E(2)}}, E(1));
  CHECK(s.exceptions() == Map{{5, E(2)}});
  CHECK(s.is_normalized());
  CHECK(s.exponent(7) == E(1));
  CHECK(s.exponent(8) == E(0));
  CHECK_THROWS_AS(Universe::finite({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Universe::finite({2, 9}), std::invalid_argument);
  auto u = Universe::finite({2, 3, 5});
  CHECK_THROWS_AS(SupernaturalNumber(Map{{7, E(1)}}, E(0), u), std::invalid_argument);
  auto full = SupernaturalNumber::full(u);
  CHECK(full.rest() == E(0));
  CHECK(full.exponent(3) == kInfinity);
  CHECK(full.exponent(7) == E(0));
}

TEST_CASE("divides") {
  CHECK(divides(nat(12), sn({{2, E(2)}, {3, kInfinity}, {5, E(2)}})));
  CHECK(divides(sn({{2, E(2)}}), sn({}, kInfinity)));
  CHECK_FALSE(divides(sn({{2, E(3)}}), nat(12)));
  CHECK_FALSE(divides(sn({}, E(1)), sn({{2, E(5)}})));
  CHECK(divides(sn({{2, E(5)}}), sn({}, E(5))));
  CHECK_THROWS_AS(divides(nat(2), SupernaturalNumber::from_natural(2, Universe::finite({2}))), UniverseMismatch);
}

TEST_CASE("join, meet, multiply and quotient examples") {
  CHECK(join(nat(4), nat(6)) == nat(12));
  CHECK(join(sn({{2, kInfinity}}), sn({{3, E(1)}})) == sn({{2, kInfinity}, {3, E(1)}}));
  CHECK(meet(nat(4), nat(6)) == nat(2));
  CHECK(meet(sn({}, kInfinity), sn({{5, E(2)}})) == sn({{5, E(2)}}));
  CHECK(multiply(nat(4), nat(6)) == nat(24));
  CHECK(multiply(sn({}, E(1)), sn({{3, kInfinity}})) == sn({{3, kInfinity}}, E(1)));
  CHECK(quotient(nat(12), nat(4)) == nat(3));
  CHECK(quotient(sn({{2, E(2)}, {3, kInfinity}}), sn({{3, kInfinity}})) == sn({{2, E(2)}}));
  auto full = SupernaturalNumber::full();
  CHECK(quotient(full, full) == nat(1));
  CHECK_THROWS_AS(quotient(nat(4), nat(3)), DomainError);
}

TEST_CASE("is_natural and natural_value") {
  CHECK(natural_value(sn({{2, E(2)}, {3, E(1)}})) == 12U);
  CHECK_FALSE(natural_value(sn({}, kInfinity)).has_value());
  CHECK_FALSE(natural_value(sn({{7, E(1)}}, E(1))).has_value());
  CHECK(is_natural(SupernaturalNumber::from_natural(30, Universe::finite({2, 3, 5}))));
  CHECK_FALSE(is_natural(SupernaturalNumber::full(Universe::finite({2, 3}))));
  CHECK_THROWS_AS(natural_value(sn({{2, E(64)}})), std::overflow_error);
}

TEST_CASE("natural embedding for m, n up to 10^4") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> d(1, 10000);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t m = 1; m <= 60; ++m)
    for (std::uint64_t n = 1; n <= 60; ++n) pairs.emplace_back(m, n);
  for (int i = 0; i < 20000; ++i) pairs.emplace_back(d(rng), d(rng));
  for (auto [m, n] : pairs) {
    INFO(m << " " << n);
    REQUIRE(join(nat(m), nat(n)) == nat(std::lcm(m, n)));
    REQUIRE(meet(nat(m), nat(n)) == nat(std::gcd(m, n)));
    REQUIRE(divides(nat(m), nat(n)) == (n % m == 0));
    REQUIRE(multiply(nat(m), nat(n)) == nat(m * n));
    if (n % m == 0) REQUIRE(quotient(nat(n), nat(m)) == nat(n / m));
  }
}

namespace {

std::vector<SupernaturalNumber> random_batch(std::uint64_t seed, const Universe& u, int count) {
  std::mt19937_64 rng(seed);
  std::vector<SupernaturalNumber> out;
  std::vector<std::uint64_t> primes = u.is_all() ? std::vector<std::uint64_t>{2, 3, 5, 7} : u.primes();
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_supernatural(rng, primes, 3, u));
  return out;
}

}  // namespace

TEST_CASE("lattice laws on random triples") {
  for (const auto& u : {Universe::all_primes(), Universe::finite({2, 3, 5})}) {
    auto xs = random_batch(11, u, 24);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        REQUIRE(join(a, b) == join(b, a));
        REQUIRE(meet(a, b) == meet(b, a));
        REQUIRE(meet(a, join(a, b)) == a);
        REQUIRE(join(a, meet(a, b)) == a);
        REQUIRE(divides(a, b) == (join(a, b) == b));
        REQUIRE(divides(a, b) == (meet(a, b) == a));
        REQUIRE(join(a, b).is_normalized());
        REQUIRE(meet(a, b).is_normalized());
        REQUIRE(multiply(a, b).is_normalized());
        REQUIRE(divides(a, multiply(a, b)));
        for (const auto& c : xs) {
          REQUIRE(join(join(a, b), c) == join(a, join(b, c)));
          REQUIRE(meet(meet(a, b), c) == meet(a, meet(b, c)));
        }
      }
    for (const auto& a : xs) {
      REQUIRE(join(a, a) == a);
      REQUIRE(meet(a, a) == a);
      auto renormalised = SupernaturalNumber(a.exceptions(), a.rest(), a.universe());
      REQUIRE(renormalised == a);
    }
  }
}

TEST_CASE("quotient is a partial inverse of multiplication") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t den = rng() % 5000 + 1;
    std::uint64_t num = den * (rng() % 200 + 1);
    auto q = quotient(nat(num), nat(den));
    REQUIRE(multiply(q, nat(den)) == nat(num));
  }
  for (const auto& a : random_batch(3, Universe::all_primes(), 40))
    for (const auto& b : random_batch(4, Universe::all_primes(), 40)) {
      if (!divides(b, a)) continue;
      auto q = quotient(a, b);
      REQUIRE(q.is_normalized());
      REQUIRE(divides(q, a));
    }
}

TEST_CASE("text round trip") {
  for (const auto& u : {Universe::all_primes(), Universe::finite({2, 3, 5, 7})})
    for (const auto& a : random_batch(21, u, 200)) {
      auto text = render(a);
      INFO(text);
      REQUIRE(parse_supernatural(text) == a);
      REQUIRE(render(parse_supernatural(text)) == text);
    }
}
