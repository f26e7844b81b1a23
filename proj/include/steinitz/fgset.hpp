#pragma once

// Field generating sets: the divisor set {n : n | S} of a Steinitz number S.
// An FGSet is a view over its Steinitz number; the divisor set itself may be
// infinite and is never stored.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "steinitz/errors.hpp"
#include "steinitz/supernatural.hpp"

namespace steinitz {

/// A natural number or the marker "countably infinite".
class ExtendedCount {
 public:
  static constexpr ExtendedCount finite(std::uint64_t n) { return ExtendedCount{n}; }
  static constexpr ExtendedCount countably_infinite() { return ExtendedCount{}; }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr std::uint64_t value() const {
    if (!value_) throw std::logic_error("count is countably infinite");
    return *value_;
  }

  bool operator==(const ExtendedCount&) const = default;

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("countably-infinite");
  }

 private:
  constexpr ExtendedCount() = default;
  constexpr explicit ExtendedCount(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// A finitely described set of primes: either the listed primes, or (cofinite)
/// every prime except the listed ones.
struct PrimeSet {
  bool cofinite = false;
  std::vector<std::uint64_t> listed;

  bool contains(std::uint64_t q) const {
    bool in_list = std::binary_search(listed.begin(), listed.end(), q);
    return cofinite ? (is_prime(q) && !in_list) : in_list;
  }
  ExtendedCount size() const {
    return cofinite ? ExtendedCount::countably_infinite() : ExtendedCount::finite(listed.size());
  }
  bool empty() const { return !cofinite && listed.empty(); }
  bool operator==(const PrimeSet&) const = default;

  std::string to_string() const {
    std::string body;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (i) body += ",";
      body += std::to_string(listed[i]);
    }
    if (cofinite) return listed.empty() ? "all primes" : "all primes except {" + body + "}";
    return "{" + body + "}";
  }
};

class FGSet {
 public:
  FGSet() = default;
  explicit FGSet(SupernaturalNumber steinitz) : steinitz_(std::move(steinitz)) {}

  const SupernaturalNumber& steinitz() const { return steinitz_; }
  const Universe& universe() const { return steinitz_.universe(); }

  bool operator==(const FGSet&) const = default;

 private:
  SupernaturalNumber steinitz_;
};

inline bool member(const FGSet& t, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("member: 0 is not a natural number >= 1");
  for (const auto& [q, v] : factorize(n)) {
    if (Exponent{v} > t.steinitz().exponent(q)) return false;
  }
  return true;
}

/// o_T(t): the largest n with t^n in T, possibly infinite.
inline Exponent order(const FGSet& t, std::uint64_t base) {
  if (base <= 1) throw std::invalid_argument("order: base must be >= 2");
  Exponent best = kInfinity;
  for (const auto& [q, v] : factorize(base)) {
    Exponent e = t.steinitz().exponent(q);
    Exponent term = e.is_infinite() ? kInfinity : Exponent{e.value() / v};
    best = std::min(best, term);
  }
  return best;
}

/// Finite part T_f (primes of finite nonzero order) and infinite part T_inf.
struct Parts {
  PrimeSet finite_part;
  PrimeSet infinite_part;
  ExtendedCount finite_count = ExtendedCount::finite(0);
  ExtendedCount infinite_count = ExtendedCount::finite(0);
};

inline Parts parts(const FGSet& t) {
  const auto& s = t.steinitz();
  Parts out;
  auto in_finite = [](Exponent e) { return e.is_finite() && !e.is_zero(); };
  auto in_infinite = [](Exponent e) { return e.is_infinite(); };
  // Primes carrying the default exponent are in a part iff the default is.
  // In the all-primes universe there are infinitely many of them.
  bool rest_finite = s.universe().is_all() && in_finite(s.rest());
  bool rest_infinite = s.universe().is_all() && in_infinite(s.rest());
  out.finite_part.cofinite = rest_finite;
  out.infinite_part.cofinite = rest_infinite;
  for (const auto& [q, e] : s.exceptions()) {
    if (rest_finite ? !in_finite(e) : in_finite(e)) out.finite_part.listed.push_back(q);
    if (rest_infinite ? !in_infinite(e) : in_infinite(e)) out.infinite_part.listed.push_back(q);
  }
  out.finite_count = out.finite_part.size();
  out.infinite_count = out.infinite_part.size();
  return out;
}

/// Result of checking the three FG-set axioms on an explicit finite set.
struct AxiomCheck {
  enum class Violation { None, MissingOne, NotDivisorClosed, NotLcmClosed };

  Violation violation = Violation::None;
  // MissingOne: {1}. NotDivisorClosed: {n, d} with d | n, d absent.
  // NotLcmClosed: {m, n, lcm} with lcm absent.
  std::vector<std::uint64_t> witness;

  bool holds() const { return violation == Violation::None; }
  explicit operator bool() const { return holds(); }
};

inline AxiomCheck verify_axioms(const std::set<std::uint64_t>& s) {
  if (s.contains(0)) throw std::invalid_argument("verify_axioms: members must be >= 1");
  if (!s.contains(1)) return {AxiomCheck::Violation::MissingOne, {1}};
  for (auto n : s) {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d) continue;
      if (!s.contains(d)) return {AxiomCheck::Violation::NotDivisorClosed, {n, d}};
      if (!s.contains(n / d)) return {AxiomCheck::Violation::NotDivisorClosed, {n, n / d}};
    }
  }
  for (auto it = s.begin(); it != s.end(); ++it) {
    for (auto jt = std::next(it); jt != s.end(); ++jt) {
      std::uint64_t l = std::lcm(*it, *jt);
      if (!s.contains(l)) return {AxiomCheck::Violation::NotLcmClosed, {*it, *jt, l}};
    }
  }
  return {};
}

/// The maximal FG-subset of t obtained by lowering the order of q in T_f by one.
inline FGSet lower_at(const FGSet& t, std::uint64_t q) {
  Exponent e = t.steinitz().exponent(q);
  if (!is_prime(q) || !t.universe().contains(q) || e.is_zero() || e.is_infinite())
    throw DomainError("lower_at: " + std::to_string(q) + " is not in the finite part");
  auto m = t.steinitz().exceptions();
  m[q] = Exponent{e.value() - 1};
  return FGSet(SupernaturalNumber(std::move(m), t.steinitz().rest(), t.universe()));
}

/// All maximal FG-subsets, one per prime of T_f. When T_f is infinite only
/// `count` is set and individual subsets come from `at`.
struct MaximalSubsets {
  FGSet parent;
  ExtendedCount count = ExtendedCount::finite(0);
  std::vector<FGSet> subsets;  // ascending by the lowered prime; empty when count is infinite

  FGSet at(std::uint64_t q) const { return lower_at(parent, q); }
};

inline MaximalSubsets maximal_fg_subsets(const FGSet& t) {
  MaximalSubsets out{t, ExtendedCount::finite(0), {}};
  Parts p = parts(t);
  out.count = p.finite_count;
  if (p.finite_count.is_finite()) {
    for (auto q : p.finite_part.listed) out.subsets.push_back(lower_at(t, q));
  }
  return out;
}

/// True iff lower is obtained from upper by lowering one finite nonzero
/// exponent by exactly one.
inline bool is_maximal_fg_subset(const FGSet& lower, const FGSet& upper) {
  const auto& a = lower.steinitz();
  const auto& b = upper.steinitz();
  if (a.universe() != b.universe()) throw UniverseMismatch();
  if (a.rest() != b.rest()) return false;
  std::set<std::uint64_t> keys;
  for (const auto& kv : a.exceptions()) keys.insert(kv.first);
  for (const auto& kv : b.exceptions()) keys.insert(kv.first);
  int differing = 0;
  for (auto q : keys) {
    Exponent x = a.exponent(q);
    Exponent y = b.exponent(q);
    if (x == y) continue;
    if (++differing > 1) return false;
    if (y.is_infinite() || x.is_infinite() || y.is_zero() || y.value() != x.value() + 1)
      return false;
  }
  return differing == 1;
}

}  // namespace steinitz
