#pragma once

// Predicted maximal subrings for three ring families, compared set-for-set
// against brute-force enumeration.
//
//   gf(p,n):       fixed fields of x -> x^(p^(n/q)) for primes q | n.
//   dual(p,n):     K[e]/(e^2), K = F_{p^n}: the constants K, plus S + K e for
//                  each maximal subfield S of K. The only sigma-derivation of
//                  an absolutely algebraic field is 0, so every field-type
//                  maximal subring {sigma(x) + delta(x) e} collapses onto K.
//   product(p,n):  K x K: S x K and K x S for maximal S, plus the graphs
//                  {(x, sigma(x))} of the n automorphisms of K.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "steinitz/element_set.hpp"
#include "steinitz/finite_ring.hpp"
#include "steinitz/primes.hpp"
#include "steinitz/subring_lattice.hpp"

namespace steinitz {

enum class Family { Gf, Dual, Product };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Gf: return "gf";
    case Family::Dual: return "dual";
    case Family::Product: return "product";
  }
  return "?";
}

struct FamilyInstance {
  Family family = Family::Gf;
  std::uint64_t p = 2;
  std::uint64_t n = 1;

  std::string name() const {
    return std::string(to_string(family)) + "(" + std::to_string(p) + "," + std::to_string(n) + ")";
  }
};

/// Builds the ring of a family instance: F_{p^n}, F_{p^n}[e]/(e^2) or F_{p^n} x F_{p^n}.
inline FiniteRing make_family_ring(const FamilyInstance& inst, RingLimits limits = {}) {
  switch (inst.family) {
    case Family::Gf: return make_gf(inst.p, inst.n, limits);
    case Family::Dual: {
      std::uint64_t q = detail::checked_power(inst.p, inst.n, limits.bound());
      if (q * q > limits.bound()) throw ResourceLimitExceeded(inst.name() + " exceeds bound");
      return make_dual(make_gf(inst.p, inst.n, limits), limits);
    }
    case Family::Product: {
      std::uint64_t q = detail::checked_power(inst.p, inst.n, limits.bound());
      if (q * q > limits.bound()) throw ResourceLimitExceeded(inst.name() + " exceeds bound");
      auto k = make_gf(inst.p, inst.n, limits);
      return make_product(k, k, limits);
    }
  }
  throw std::logic_error("unknown family");
}

/// The Frobenius x -> x^p of a field of characteristic p, as a permutation.
inline std::vector<Element> frobenius(const FiniteRing& k, std::uint64_t p) {
  std::vector<Element> out(k.size());
  for (Element x = 0; x < k.size(); ++x) out[x] = k.pow(x, p);
  return out;
}

/// The automorphism x -> x^(p^power).
inline std::vector<Element> frobenius_power(const FiniteRing& k, std::uint64_t p, std::uint64_t power) {
  auto frob = frobenius(k, p);
  std::vector<Element> out(k.size());
  for (Element x = 0; x < k.size(); ++x) {
    Element y = x;
    for (std::uint64_t i = 0; i < power; ++i) y = frob[y];
    out[x] = y;
  }
  return out;
}

/// Fixed points of x -> x^(p^power).
inline ElementSet frobenius_fixed_field(const FiniteRing& k, std::uint64_t p, std::uint64_t power) {
  auto sigma = frobenius_power(k, p, power);
  ElementSet out(k.size());
  for (Element x = 0; x < k.size(); ++x) {
    if (sigma[x] == x) out.set(x);
  }
  return out;
}

/// Maximal subfields of F_{p^n} (given as `k`) as element sets, one per prime q | n.
inline std::vector<ElementSet> predicted_field_maximal_subrings(const FiniteRing& k, std::uint64_t p,
                                                                std::uint64_t n) {
  std::vector<ElementSet> out;
  for (const auto& [q, e] : factorize(n)) out.push_back(frobenius_fixed_field(k, p, n / q));
  return out;
}

/// Predicted maximal subrings of make_family_ring(inst), built from the field
/// structure of F_{p^n} alone (no subring enumeration).
inline std::vector<ElementSet> predicted_maximal_subrings(const FamilyInstance& inst, RingLimits limits = {}) {
  auto k = make_gf(inst.p, inst.n, limits);
  const std::size_t m = k.size();
  auto field_max = predicted_field_maximal_subrings(k, inst.p, inst.n);
  std::vector<ElementSet> out;

  switch (inst.family) {
    case Family::Gf:
      out = field_max;
      break;
    case Family::Dual: {
      ElementSet constants(m * m);
      for (Element a = 0; a < m; ++a) constants.set(dual_index(a, 0, m));
      out.push_back(constants);
      for (const auto& s : field_max) {
        ElementSet r(m * m);
        for (Element a : s.elements())
          for (Element b = 0; b < m; ++b) r.set(dual_index(a, b, m));
        out.push_back(r);
      }
      break;
    }
    case Family::Product: {
      for (const auto& s : field_max) {
        ElementSet left(m * m), right(m * m);
        for (Element a : s.elements()) {
          for (Element b = 0; b < m; ++b) {
            left.set(product_index(a, b, m));
            right.set(product_index(b, a, m));
          }
        }
        out.push_back(left);
        out.push_back(right);
      }
      for (std::uint64_t i = 0; i < inst.n; ++i) {
        auto sigma = frobenius_power(k, inst.p, i);
        ElementSet graph(m * m);
        for (Element x = 0; x < m; ++x) graph.set(product_index(x, sigma[x], m));
        out.push_back(graph);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Closed-form number of maximal subrings: omega(n), 1 + omega(n), 2 omega(n) + n.
inline std::uint64_t predicted_count(const FamilyInstance& inst) {
  std::uint64_t w = omega(inst.n);
  switch (inst.family) {
    case Family::Gf: return w;
    case Family::Dual: return 1 + w;
    case Family::Product: return 2 * w + inst.n;
  }
  return 0;
}

struct Comparison {
  FamilyInstance instance;
  std::size_t ring_size = 0;
  std::size_t lattice_size = 0;
  std::uint64_t formula_count = 0;
  std::vector<ElementSet> predicted;
  std::vector<ElementSet> observed;
  bool sets_equal = false;

  bool match() const { return sets_equal && formula_count == observed.size(); }
};

inline Comparison predict_and_compare(const FamilyInstance& inst, RingLimits limits = {},
                                      EnumerateOptions options = {}) {
  Comparison c;
  c.instance = inst;
  auto ring = make_family_ring(inst, limits);
  auto lattice = enumerate_subrings(ring, options);
  c.ring_size = ring.size();
  c.lattice_size = lattice.subrings.size();
  c.formula_count = predicted_count(inst);
  c.predicted = predicted_maximal_subrings(inst, limits);
  c.observed = maximal_subrings(lattice);
  c.sets_equal = c.predicted == c.observed;
  return c;
}

}  // namespace steinitz
