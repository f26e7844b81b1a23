#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace steinitz {

/// Exponent of a prime in a supernatural number: a natural number or infinity,
/// totally ordered with infinity on top.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(std::uint64_t n) : raw_(n) {
    if (n == kInfinityRaw) throw std::overflow_error("exponent too large");
  }

  static constexpr Exponent infinity() {
    Exponent e;
    e.raw_ = kInfinityRaw;
    return e;
  }

  constexpr bool is_infinite() const { return raw_ == kInfinityRaw; }
  constexpr bool is_finite() const { return raw_ != kInfinityRaw; }
  constexpr bool is_zero() const { return raw_ == 0; }

  /// The natural value; throws for infinity.
  constexpr std::uint64_t value() const {
    if (is_infinite()) throw std::logic_error("infinite exponent has no natural value");
    return raw_;
  }

  constexpr auto operator<=>(const Exponent&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(raw_); }

 private:
  static constexpr std::uint64_t kInfinityRaw = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t raw_ = 0;
};

inline constexpr Exponent kInfinity = Exponent::infinity();

/// Pointwise sum; infinity absorbs.
constexpr Exponent add(Exponent a, Exponent b) {
  if (a.is_infinite() || b.is_infinite()) return kInfinity;
  if (b.value() > std::numeric_limits<std::uint64_t>::max() - 1 - a.value())
    throw std::overflow_error("exponent overflow");
  return Exponent{a.value() + b.value()};
}

/// a - b for b <= a, with inf - finite = inf and inf - inf = 0.
constexpr Exponent subtract(Exponent a, Exponent b) {
  if (b > a) throw std::domain_error("exponent subtraction below zero");
  if (a.is_infinite()) return b.is_infinite() ? Exponent{0} : kInfinity;
  return Exponent{a.value() - b.value()};
}

}  // namespace steinitz
