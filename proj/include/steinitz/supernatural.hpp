#pragma once

// Supernatural (Steinitz) numbers: formal products over primes with exponents
// in N u {inf}, stored as finitely many exceptions over a default exponent.
//
// The divisibility order on these numbers is the inclusion order of subfields
// of the algebraic closure of F_p, so join is compositum and meet is
// intersection.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steinitz/errors.hpp"
#include "steinitz/exponent.hpp"
#include "steinitz/primes.hpp"

namespace steinitz {

/// The set of primes a supernatural number ranges over: either all primes or an
/// explicit finite set (a truncated world for examples that need infinitely
/// many independent exponents).
class Universe {
 public:
  static Universe all_primes() { return Universe{}; }

  static Universe finite(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
      throw std::invalid_argument("duplicate prime in universe");
    for (auto p : primes) {
      if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " in universe is not prime");
    }
    Universe u;
    u.primes_ = std::move(primes);
    return u;
  }

  bool is_all() const { return !primes_.has_value(); }

  /// Sorted primes of a finite universe; empty for the all-primes universe.
  const std::vector<std::uint64_t>& primes() const {
    static const std::vector<std::uint64_t> none;
    return primes_ ? *primes_ : none;
  }

  bool contains(std::uint64_t q) const {
    if (!primes_) return is_prime(q);
    return std::binary_search(primes_->begin(), primes_->end(), q);
  }

  bool operator==(const Universe&) const = default;

 private:
  std::optional<std::vector<std::uint64_t>> primes_;
};

class SupernaturalNumber {
 public:
  using ExponentMap = std::map<std::uint64_t, Exponent>;

  /// The supernatural number 1.
  SupernaturalNumber() = default;

  /// Validates keys and normalises. In a finite universe the default is folded
  /// into explicit exceptions, so the canonical default there is always 0.
  explicit SupernaturalNumber(ExponentMap exceptions, Exponent rest = Exponent{0},
                              Universe universe = Universe::all_primes())
      : exceptions_(std::move(exceptions)), rest_(rest), universe_(std::move(universe)) {
    for (const auto& [q, e] : exceptions_) {
      if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
      if (!universe_.contains(q))
        throw std::invalid_argument("prime " + std::to_string(q) + " lies outside the universe");
    }
    normalize();
  }

  static SupernaturalNumber from_natural(std::uint64_t n,
                                         Universe universe = Universe::all_primes()) {
    if (n == 0) throw std::invalid_argument("0 is not a supernatural number");
    ExponentMap m;
    for (const auto& [q, e] : factorize(n)) m.emplace(q, Exponent{e});
    return SupernaturalNumber(std::move(m), Exponent{0}, std::move(universe));
  }

  /// Every prime of the universe to the power infinity (the Steinitz number of
  /// the algebraic closure).
  static SupernaturalNumber full(Universe universe = Universe::all_primes()) {
    return SupernaturalNumber({}, kInfinity, std::move(universe));
  }

  const ExponentMap& exceptions() const { return exceptions_; }
  Exponent rest() const { return rest_; }
  const Universe& universe() const { return universe_; }

  /// Exponent at q. Non-primes and primes outside a finite universe give 0.
  Exponent exponent(std::uint64_t q) const {
    if (auto it = exceptions_.find(q); it != exceptions_.end()) return it->second;
    if (!universe_.is_all()) return Exponent{0};
    return is_prime(q) ? rest_ : Exponent{0};
  }

  bool is_normalized() const {
    for (const auto& [q, e] : exceptions_) {
      if (e == rest_) return false;
    }
    return universe_.is_all() || rest_.is_zero();
  }

  bool operator==(const SupernaturalNumber&) const = default;

 private:
  void normalize() {
    if (!universe_.is_all()) {
      if (!rest_.is_zero()) {
        for (auto q : universe_.primes()) exceptions_.try_emplace(q, rest_);
        rest_ = Exponent{0};
      }
    }
    std::erase_if(exceptions_, [&](const auto& kv) { return kv.second == rest_; });
  }

  ExponentMap exceptions_;
  Exponent rest_{0};
  Universe universe_;
};

namespace detail {

template <typename F>
SupernaturalNumber combine(const SupernaturalNumber& a, const SupernaturalNumber& b, F f) {
  if (a.universe() != b.universe()) throw UniverseMismatch();
  SupernaturalNumber::ExponentMap out;
  for (const auto& [q, e] : a.exceptions()) out[q] = f(e, b.exponent(q));
  for (const auto& [q, e] : b.exceptions()) {
    if (!out.contains(q)) out[q] = f(a.exponent(q), e);
  }
  return SupernaturalNumber(std::move(out), f(a.rest(), b.rest()), a.universe());
}

}  // namespace detail

/// Pointwise a <= b. Decided from exceptions and defaults; the all-primes
/// universe always has primes outside both exception sets, so the defaults
/// must compare too.
inline bool divides(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch();
  for (const auto& [q, e] : a.exceptions()) {
    if (e > b.exponent(q)) return false;
  }
  for (const auto& [q, e] : b.exceptions()) {
    if (a.exponent(q) > e) return false;
  }
  return a.rest() <= b.rest();
}

/// lcm: pointwise max.
inline SupernaturalNumber join(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return detail::combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

/// gcd: pointwise min.
inline SupernaturalNumber meet(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return detail::combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

/// Pointwise sum.
inline SupernaturalNumber multiply(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return detail::combine(a, b, [](Exponent x, Exponent y) { return add(x, y); });
}

/// num / den with inf - inf = 0. Requires den | num.
inline SupernaturalNumber quotient(const SupernaturalNumber& num, const SupernaturalNumber& den) {
  if (!divides(den, num)) throw DomainError("quotient: denominator does not divide numerator");
  return detail::combine(num, den, [](Exponent x, Exponent y) { return subtract(x, y); });
}

/// True when the number is an ordinary natural (default 0, all exponents finite).
inline bool is_natural(const SupernaturalNumber& a) {
  if (!a.rest().is_zero()) return false;
  return std::all_of(a.exceptions().begin(), a.exceptions().end(),
                     [](const auto& kv) { return kv.second.is_finite(); });
}

/// The natural number a denotes, if any. Throws std::overflow_error when it is
/// natural but does not fit in 64 bits.
inline std::optional<std::uint64_t> natural_value(const SupernaturalNumber& a) {
  if (!is_natural(a)) return std::nullopt;
  std::uint64_t n = 1;
  for (const auto& [q, e] : a.exceptions()) {
    for (std::uint64_t i = 0; i < e.value(); ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / q)
        throw std::overflow_error("supernatural value exceeds 64 bits");
      n *= q;
    }
  }
  return n;
}

}  // namespace steinitz
