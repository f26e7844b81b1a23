#include <functional>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "steinitz/field.hpp"
#include "worked_examples.hpp"

using namespace steinitz;
using Map = SupernaturalNumber::ExponentMap;

namespace {

Exponent E(std::uint64_t n) { return Exponent{n}; }
FieldDescriptor gf(std::uint64_t p, std::uint64_t n) { return FieldDescriptor::finite(p, n); }
FieldDescriptor fd(std::uint64_t p, Map m, Exponent rest = Exponent{0}, Universe u = Universe::all_primes()) {
  return FieldDescriptor(p, SupernaturalNumber(std::move(m), rest, std::move(u)));
}

// Every field over the universe {2,3,5} with exponents in {0..3, inf}.
std::vector<FieldDescriptor> small_world() {
  auto u = Universe::finite({2, 3, 5});
  std::vector<Exponent> values{E(0), E(1), E(2), E(3), kInfinity};
  std::vector<FieldDescriptor> out;
  for (auto a : values)
    for (auto b : values)
      for (auto c : values) out.push_back(fd(2, {{2, a}, {3, b}, {5, c}}, E(0), u));
  return out;
}

bool strictly_below(const FieldDescriptor& a, const FieldDescriptor& b) { return is_subfield(a, b) && !(a == b); }

}  // namespace

TEST_CASE("descriptor basics") {
  CHECK_THROWS_AS(FieldDescriptor(4, SupernaturalNumber()), std::invalid_argument);
  CHECK(gf(2, 12).content == SupernaturalNumber::from_natural(12));
  CHECK(FieldDescriptor::closure(5).content == SupernaturalNumber::full());
  CHECK(is_subfield(gf(2, 2), gf(2, 12)));
  CHECK(is_subfield(gf(2, 3), gf(2, 12)));
  CHECK_FALSE(is_subfield(gf(2, 8), gf(2, 12)));
  CHECK_FALSE(is_subfield(gf(2, 2), gf(3, 2)));
  CHECK(compositum(gf(2, 4), gf(2, 6)) == gf(2, 12));
  CHECK(intersection(gf(2, 4), gf(2, 6)) == gf(2, 2));
  CHECK_THROWS(compositum(gf(2, 4), gf(3, 6)));
}

TEST_CASE("rgmax count") {
  CHECK(rgmax_count(gf(2, 12)) == ExtendedCount::finite(2));
  CHECK(rgmax_count(FieldDescriptor::closure(5)) == ExtendedCount::finite(0));
  CHECK(rgmax_count(fd(3, {}, E(1))) == ExtendedCount::countably_infinite());
  CHECK(rgmax_count(gf(7, 1)) == ExtendedCount::finite(0));
  CHECK(rgmax_count(worked::unique_subfield_field(7, 3)) == ExtendedCount::finite(1));
  CHECK(rgmax_count(worked::finite_orders_field(7, 3)) == ExtendedCount::countably_infinite());
}

TEST_CASE("rgmax list") {
  CHECK(rgmax_list(gf(2, 12)) == std::vector<FieldDescriptor>{gf(2, 6), gf(2, 4)});
  auto e = worked::capped_three(5, 4);
  CHECK(rgmax_list(e) == std::vector<FieldDescriptor>{worked::capped_three(5, 3)});
  auto p = worked::unique_subfield_field(11, 3);
  CHECK(rgmax_list(p) == std::vector<FieldDescriptor>{worked::unique_subfield_field(11, 2)});
  CHECK(rgmax_list(FieldDescriptor::closure(3)).empty());
  CHECK_THROWS_AS(rgmax_list(fd(3, {}, E(1))), InfiniteCountError);
  CHECK(maximal_subfield_at(fd(3, {}, E(1)), 101) == fd(3, {{101, E(0)}}, E(1)));
}

TEST_CASE("largest nonsubmaximal subfield") {
  CHECK(largest_nonsubmaximal(gf(2, 12)) == gf(2, 1));
  CHECK(largest_nonsubmaximal(fd(2, {{2, E(3)}, {3, kInfinity}, {7, kInfinity}})) ==
        fd(2, {{3, kInfinity}, {7, kInfinity}}));
  CHECK(largest_nonsubmaximal(FieldDescriptor::closure(5)) == FieldDescriptor::closure(5));
  CHECK(largest_nonsubmaximal(fd(3, {{2, kInfinity}}, E(4))) == fd(3, {{2, kInfinity}}));
}

TEST_CASE("degree") {
  CHECK(degree(gf(2, 12), gf(2, 1)) == SupernaturalNumber::from_natural(12));
  auto e = fd(2, {{2, E(2)}, {3, E(1)}, {5, kInfinity}});
  CHECK(degree(e, largest_nonsubmaximal(e)) == SupernaturalNumber::from_natural(12));
  auto c = FieldDescriptor::closure(5);
  CHECK(degree(c, c) == SupernaturalNumber());
  CHECK_THROWS(degree(gf(2, 4), gf(2, 3)));
}

TEST_CASE("chain statistics") {
  auto r = chain_stats(gf(2, 12), true);
  CHECK(r.length == 3);
  CHECK(r.chain_count == 3);
  CHECK(r.terminus == gf(2, 1));
  REQUIRE(r.chains);
  for (const auto& chain : *r.chains) {
    REQUIRE(chain.size() == 4);
    CHECK(chain.front() == gf(2, 12));
    CHECK(chain.back() == gf(2, 1));
  }
  auto closure = chain_stats(FieldDescriptor::closure(3), true);
  CHECK(closure.length == 0);
  CHECK(closure.chain_count == 1);
  CHECK(closure.terminus == FieldDescriptor::closure(3));
  CHECK_THROWS_AS(chain_stats(fd(3, {}, E(1)), false), InfiniteCountError);
  CHECK_THROWS_AS(chain_stats(gf(2, 2 * 3 * 5 * 7 * 11 * 13), false, 100), ResourceLimitExceeded);
}

TEST_CASE("saturated chains agree with a brute-force poset walk") {
  auto world = small_world();
  // Lower covers of x inside the world, found by exhaustive comparison.
  auto covers_below = [&](const FieldDescriptor& x) {
    std::vector<FieldDescriptor> out;
    for (const auto& y : world) {
      if (!strictly_below(y, x)) continue;
      bool cover = true;
      for (const auto& z : world)
        if (strictly_below(y, z) && strictly_below(z, x)) cover = false;
      if (cover) out.push_back(y);
    }
    return out;
  };
  // Exponent 3 sits right below inf only because the world is truncated;
  // such steps are not covers in the full lattice.
  auto field_steps = [&](const FieldDescriptor& x) {
    std::vector<FieldDescriptor> out;
    for (const auto& y : covers_below(x)) {
      bool same_infinite = true;
      for (std::uint64_t q : {2, 3, 5})
        if (x.content.exponent(q).is_infinite() != y.content.exponent(q).is_infinite()) same_infinite = false;
      if (same_infinite) out.push_back(y);
    }
    return out;
  };
  int checked = 0;
  for (const auto& e : world) {
    std::uint64_t sum = 0;
    for (std::uint64_t q : {2, 3, 5})
      if (e.content.exponent(q).is_finite()) sum += e.content.exponent(q).value();
    if (sum > 6) continue;
    std::set<std::uint64_t> lengths;
    std::uint64_t count = 0;
    std::function<void(const FieldDescriptor&, std::uint64_t)> walk = [&](const FieldDescriptor& x,
                                                                           std::uint64_t depth) {
      auto next = field_steps(x);
      if (next.empty()) {
        REQUIRE(x == largest_nonsubmaximal(e));
        lengths.insert(depth);
        ++count;
        return;
      }
      for (const auto& y : next) walk(y, depth + 1);
    };
    walk(e, 0);
    auto r = chain_stats(e, true);
    REQUIRE(lengths == std::set<std::uint64_t>{r.length});
    REQUIRE(count == r.chain_count);
    REQUIRE(r.chains->size() == count);
    for (const auto& chain : *r.chains) {
      REQUIRE(chain.size() == r.length + 1);
      for (std::size_t i = 1; i < chain.size(); ++i)
        REQUIRE(is_maximal_fg_subset(chain[i].fg_set(), chain[i - 1].fg_set()));
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("intermediate count") {
  CHECK(intermediate_count(gf(2, 12), gf(2, 1)) == ExtendedCount::finite(6));
  auto e = fd(2, {{2, E(1)}, {3, E(1)}, {5, kInfinity}});
  CHECK(intermediate_count(e, e) == ExtendedCount::finite(1));
  CHECK(intermediate_count(e, largest_nonsubmaximal(e)) == ExtendedCount::finite(4));
  for (std::uint64_t n = 1; n <= 500; ++n)
    REQUIRE(intermediate_count(gf(3, n), gf(3, 1)) == ExtendedCount::finite(oracle::divisor_count(n)));
  CHECK_THROWS_AS(intermediate_count(FieldDescriptor::closure(2), gf(2, 1)), DomainError);
}

TEST_CASE("embedding into maximal subrings") {
  CHECK(embeds_all(gf(2, 12)));
  CHECK_FALSE(embeds_all(worked::capped_three(5, 2)));
  CHECK_FALSE(embeds_all(FieldDescriptor::closure(7)));

  auto r = embed_in_maximal(gf(2, 12), gf(2, 2));
  REQUIRE(r.maximal);
  CHECK(*r.maximal == gf(2, 6));
  CHECK(r.lowered_prime == 2U);

  auto e = worked::capped_three(5, 2);
  auto w = embed_in_maximal(e, worked::capped_three_witness(5, 2));
  CHECK_FALSE(w.maximal);
  CHECK(w.blocking_prime == 2U);
  auto unique = rgmax_list(e).at(0);
  CHECK_FALSE(is_subfield(worked::capped_three_witness(5, 2), unique));

  for (const auto& m : rgmax_list(gf(2, 60))) {
    auto self = embed_in_maximal(gf(2, 60), m);
    REQUIRE(self.maximal);
    CHECK(*self.maximal == m);
  }
  CHECK_THROWS(embed_in_maximal(gf(2, 12), gf(2, 12)));
  CHECK_THROWS(embed_in_maximal(gf(2, 12), gf(2, 8)));
}

TEST_CASE("embedding is sound") {
  auto world = small_world();
  for (const auto& e : world)
    for (const auto& f : world) {
      if (!strictly_below(f, e)) continue;
      auto r = embed_in_maximal(e, f);
      auto maxes = rgmax_list(e);
      if (r.maximal) {
        REQUIRE(std::find(maxes.begin(), maxes.end(), *r.maximal) != maxes.end());
        REQUIRE(is_subfield(f, *r.maximal));
        for (const auto& m : maxes)
          if (is_subfield(f, m)) REQUIRE(*r.lowered_prime <= *natural_value(degree(e, m)));
      } else {
        REQUIRE_FALSE(embeds_all(e));
        REQUIRE(r.blocking_prime);
        REQUIRE(e.content.exponent(*r.blocking_prime).is_infinite());
        REQUIRE(f.content.exponent(*r.blocking_prime).is_finite());
        for (const auto& m : maxes) REQUIRE_FALSE(is_subfield(f, m));
      }
    }
}

TEST_CASE("finiteness equivalence and transfer") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    FieldDescriptor e(2, oracle::random_supernatural(rng, {2, 3, 5, 7, 11}, 3));
    auto l = largest_nonsubmaximal(e);
    REQUIRE(rgmax_count(e).is_finite() == is_natural(degree(e, l)));
    REQUIRE(largest_nonsubmaximal(l) == l);
    REQUIRE(rgmax_count(l) == ExtendedCount::finite(0));
    auto k = FieldDescriptor(2, multiply(e.content, SupernaturalNumber::from_natural(rng() % 360 + 1)));
    REQUIRE(finiteness_transfer(e, k));
    REQUIRE(largest_nonsubmaximal(k) == l);
    if (rgmax_count(e).is_finite()) REQUIRE(finiteness_transfer(l, e));
    if (rgmax_count(e).is_finite()) {
      auto maxes = rgmax_list(e);
      REQUIRE(maxes.size() == rgmax_count(e).value());
      for (const auto& m : maxes) {
        REQUIRE(is_maximal_fg_subset(m.fg_set(), e.fg_set()));
        auto d = natural_value(degree(e, m));
        REQUIRE(d);
        REQUIRE(oracle::is_prime(*d));
      }
    }
  }
  CHECK(finiteness_transfer(gf(2, 1), gf(2, 12)));
  CHECK_THROWS_AS(finiteness_transfer(gf(2, 1), FieldDescriptor::closure(2)), DomainError);
}

TEST_CASE("L(E) contains every nonsubmaximal subfield") {
  auto world = small_world();
  for (const auto& e : world) {
    auto l = largest_nonsubmaximal(e);
    for (const auto& f : world)
      if (is_subfield(f, e) && rgmax_count(f) == ExtendedCount::finite(0)) REQUIRE(is_subfield(f, l));
  }
}
