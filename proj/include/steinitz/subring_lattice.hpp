#pragma once

// Exhaustive enumeration of the unital subrings of a finite ring.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "steinitz/element_set.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/finite_ring.hpp"

namespace steinitz {

/// The unital subring generated by `seed`.
///
/// The multiplicative monoid M generated by seed and 1 is built first; its
/// additive span is closed under multiplication (a product of sums of
/// monomials is a sum of monomials), and in a finite ring additive spans
/// contain inverses, so the span is the generated subring.
inline ElementSet closure(const FiniteRing& r, std::span<const Element> seed) {
  const std::size_t n = r.size();
  std::vector<Element> gens;
  for (Element g : seed) {
    if (g >= n) throw std::out_of_range("closure: seed element out of range");
    if (g != r.one() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  ElementSet monoid(n);
  std::vector<Element> monoid_list{r.one()};
  monoid.set(r.one());
  for (std::size_t i = 0; i < monoid_list.size(); ++i) {
    for (Element g : gens) {
      Element y = r.mul(monoid_list[i], g);
      if (!monoid.test(y)) {
        monoid.set(y);
        monoid_list.push_back(y);
      }
    }
  }

  ElementSet span(n);
  std::vector<Element> span_list{r.zero()};
  span.set(r.zero());
  for (Element m : monoid_list) {
    if (span.test(m)) continue;
    // span + <m> is the union of the cosets span + k*m until k*m re-enters span.
    const std::size_t base = span_list.size();
    for (Element c = m; !span.test(c); c = r.add(c, m)) {
      for (std::size_t i = 0; i < base; ++i) {
        Element y = r.add(span_list[i], c);
        span.set(y);
        span_list.push_back(y);
      }
    }
  }
  return span;
}

inline ElementSet closure(const FiniteRing& r, const ElementSet& seed) {
  auto elems = seed.elements();
  return closure(r, std::span<const Element>(elems));
}

/// Contains 0 and 1 and is closed under +, negation and *.
inline bool is_subring(const FiniteRing& r, const ElementSet& s) {
  if (!s.test(r.zero()) || !s.test(r.one())) return false;
  auto elems = s.elements();
  for (Element a : elems) {
    if (!s.test(r.neg(a))) return false;
    for (Element b : elems) {
      if (!s.test(r.add(a, b)) || !s.test(r.mul(a, b))) return false;
    }
  }
  return true;
}

struct SubringLattice {
  std::vector<ElementSet> subrings;                     // canonical order, bottom first, top last
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices, sorted
  std::size_t bottom = 0;
  std::size_t top = 0;
  Provenance provenance = Provenance::Tables;
};

struct EnumerateOptions {
  std::size_t max_subrings = 100'000;
  // Permutes the order in which candidate elements are tried; the result is
  // the same lattice.
  std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const std::vector<ElementSet>& sets) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t k = sets.size();
  std::vector<std::size_t> below;
  for (std::size_t hi = 0; hi < k; ++hi) {
    below.clear();
    for (std::size_t lo = 0; lo < k; ++lo) {
      if (lo != hi && sets[lo].count() < sets[hi].count() && sets[lo].is_subset_of(sets[hi])) below.push_back(lo);
    }
    for (std::size_t lo : below) {
      bool covered = true;
      for (std::size_t mid : below) {
        if (mid != lo && sets[lo].count() < sets[mid].count() && sets[lo].is_subset_of(sets[mid])) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(lo, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Breadth-first saturation: start from the prime subring and extend every
/// known subring S by every a outside S, via closure(gens(S) + a). Every
/// subring is reached by adjoining its own elements one at a time, so the
/// result is complete.
inline SubringLattice enumerate_subrings(const FiniteRing& r, EnumerateOptions options = {}) {
  const std::size_t n = r.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::vector<ElementSet> found;
  std::vector<std::vector<Element>> generators;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  found.push_back(closure(r, std::span<const Element>{}));
  generators.emplace_back();
  index.emplace(found.back(), 0);

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element a : order) {
      if (found[i].test(a)) continue;
      std::vector<Element> gens = generators[i];
      gens.push_back(a);
      ElementSet s = closure(r, std::span<const Element>(gens));
      if (index.contains(s)) continue;
      if (found.size() >= options.max_subrings)
        throw ResourceLimitExceeded("subring lattice exceeds " + std::to_string(options.max_subrings) + " members");
      index.emplace(s, found.size());
      found.push_back(std::move(s));
      generators.push_back(std::move(gens));
    }
  }

  std::sort(found.begin(), found.end());
  SubringLattice lattice;
  lattice.subrings = std::move(found);
  lattice.bottom = 0;
  lattice.top = lattice.subrings.size() - 1;
  lattice.covers = detail::covering_pairs(lattice.subrings);
  lattice.provenance = r.provenance();
  return lattice;
}

/// Co-atoms: proper subrings covered by the whole ring.
inline std::vector<ElementSet> maximal_subrings(const SubringLattice& lattice) {
  std::vector<ElementSet> out;
  for (const auto& [lo, hi] : lattice.covers) {
    if (hi == lattice.top) out.push_back(lattice.subrings[lo]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ChainSet {
  std::vector<std::vector<std::size_t>> chains;  // lattice indices, top first
  // Whether all chains have the same length; only defined when the top is a field.
  std::optional<bool> uniform_length;
};

/// All maximal chains from the top down to the prime subring along covers.
inline ChainSet saturated_chains(const SubringLattice& lattice, std::size_t max_chains = 1'000'000) {
  std::vector<std::vector<std::size_t>> lower(lattice.subrings.size());
  for (const auto& [lo, hi] : lattice.covers) lower[hi].push_back(lo);
  for (auto& v : lower) std::sort(v.rbegin(), v.rend());

  ChainSet out;
  std::vector<std::size_t> path{lattice.top};
  auto descend = [&](auto&& self, std::size_t node) -> void {
    if (lower[node].empty()) {
      if (out.chains.size() >= max_chains) throw ResourceLimitExceeded("chain enumeration cap exceeded");
      out.chains.push_back(path);
      return;
    }
    for (std::size_t next : lower[node]) {
      path.push_back(next);
      self(self, next);
      path.pop_back();
    }
  };
  descend(descend, lattice.top);

  if (lattice.provenance == Provenance::Gf) {
    bool uniform = std::all_of(out.chains.begin(), out.chains.end(),
                               [&](const auto& c) { return c.size() == out.chains.front().size(); });
    out.uniform_length = uniform;
  }
  return out;
}

}  // namespace steinitz
