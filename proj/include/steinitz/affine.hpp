#pragma once

// Finiteness of the set of maximal subrings for affine algebras over
// symbolically described base fields.
//
// An affine domain F[a_1..a_n] (or field F(a_1..a_n)) has finitely many
// maximal subrings iff F does and every a_i is algebraic over F. Over an
// absolutely algebraic base an algebraic generator lying in F_{p^k} just
// joins k into the Steinitz number, so the resulting field is computable.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steinitz/errors.hpp"
#include "steinitz/field.hpp"

namespace steinitz {

struct CharZero {
  bool operator==(const CharZero&) const = default;
};
struct NotAbsolutelyAlgebraic {
  bool operator==(const NotAbsolutelyAlgebraic&) const = default;
};
/// An algebraically closed base. With a prime it is the algebraic closure of
/// F_p; without one it is not absolutely algebraic (characteristic zero or
/// transcendental over its prime field).
struct AlgebraicallyClosed {
  std::optional<std::uint64_t> prime;
  bool operator==(const AlgebraicallyClosed&) const = default;
};

using AffineBase = std::variant<FieldDescriptor, CharZero, NotAbsolutelyAlgebraic, AlgebraicallyClosed>;

struct Algebraic {
  std::uint64_t container_degree = 1;  // the generator lies in F_{p^k}
  bool operator==(const Algebraic&) const = default;
};
struct Transcendental {
  bool operator==(const Transcendental&) const = default;
};
using Generator = std::variant<Algebraic, Transcendental>;

struct DomainKind {
  bool operator==(const DomainKind&) const = default;
};
struct FieldKind {
  bool operator==(const FieldKind&) const = default;
};
struct ReducedProductKind {
  std::vector<FieldDescriptor> components;
  bool operator==(const ReducedProductKind&) const = default;
};
using AffineKind = std::variant<DomainKind, FieldKind, ReducedProductKind>;

struct AffineDescriptor {
  AffineBase base;
  std::vector<Generator> generators;
  AffineKind kind = DomainKind{};
  bool operator==(const AffineDescriptor&) const = default;
};

enum class InfiniteReason {
  CharacteristicZero,
  NotAbsolutelyAlgebraic,
  TranscendentalGenerator,
  BaseHasInfinitelyMany,
  InfinitelyManyPoints,
  SeveralPointsOverInfiniteField,
};

inline const char* to_string(InfiniteReason r) {
  switch (r) {
    case InfiniteReason::CharacteristicZero: return "characteristic-zero";
    case InfiniteReason::NotAbsolutelyAlgebraic: return "not-absolutely-algebraic";
    case InfiniteReason::TranscendentalGenerator: return "transcendental-generator";
    case InfiniteReason::BaseHasInfinitelyMany: return "base-has-infinitely-many";
    case InfiniteReason::InfinitelyManyPoints: return "infinitely-many-points";
    case InfiniteReason::SeveralPointsOverInfiniteField: return "several-points-over-infinite-field";
  }
  return "?";
}

struct FinitelyMany {
  std::optional<FieldDescriptor> field;
  std::optional<ExtendedCount> count;
  bool operator==(const FinitelyMany&) const = default;
};
struct InfinitelyMany {
  InfiniteReason reason;
  bool operator==(const InfinitelyMany&) const = default;
};
/// Every necessary condition checked passes; sufficiency is not claimed.
struct NecessaryConditionsHold {
  bool operator==(const NecessaryConditionsHold&) const = default;
};
struct Violated {
  std::string witness;
  std::vector<std::size_t> components;  // 1-based component indices involved, if any
  bool operator==(const Violated&) const = default;
};
using Verdict = std::variant<FinitelyMany, InfinitelyMany, NecessaryConditionsHold, Violated>;

namespace detail {

inline bool has_transcendental(const std::vector<Generator>& gens) {
  for (const auto& g : gens) {
    if (std::holds_alternative<Transcendental>(g)) return true;
  }
  return false;
}

inline void validate_generators(const std::vector<Generator>& gens) {
  for (const auto& g : gens) {
    if (auto a = std::get_if<Algebraic>(&g); a && a->container_degree == 0)
      throw std::invalid_argument("algebraic generator needs a container degree >= 1");
  }
}

// Shared logic of decide_domain and decide_field_extension.
inline Verdict decide_adjunction(const AffineBase& base, const std::vector<Generator>& gens) {
  validate_generators(gens);
  if (std::holds_alternative<CharZero>(base)) return InfinitelyMany{InfiniteReason::CharacteristicZero};
  if (std::holds_alternative<NotAbsolutelyAlgebraic>(base))
    return InfinitelyMany{InfiniteReason::NotAbsolutelyAlgebraic};
  if (auto closed = std::get_if<AlgebraicallyClosed>(&base)) {
    if (!closed->prime) return InfinitelyMany{InfiniteReason::NotAbsolutelyAlgebraic};
    if (has_transcendental(gens)) return InfinitelyMany{InfiniteReason::TranscendentalGenerator};
    return FinitelyMany{FieldDescriptor::closure(*closed->prime), ExtendedCount::finite(0)};
  }
  const auto& f = std::get<FieldDescriptor>(base);
  if (has_transcendental(gens)) return InfinitelyMany{InfiniteReason::TranscendentalGenerator};
  if (!rgmax_count(f).is_finite()) return InfinitelyMany{InfiniteReason::BaseHasInfinitelyMany};
  SupernaturalNumber content = f.content;
  for (const auto& g : gens) {
    content = join(content, SupernaturalNumber::from_natural(std::get<Algebraic>(g).container_degree,
                                                             f.content.universe()));
  }
  FieldDescriptor result{f.characteristic, content};
  return FinitelyMany{result, rgmax_count(result)};
}

}  // namespace detail

/// F[a_1..a_n] for an affine domain.
inline Verdict decide_domain(const AffineDescriptor& d) {
  if (!std::holds_alternative<DomainKind>(d.kind)) throw std::invalid_argument("decide_domain: kind must be domain");
  return detail::decide_adjunction(d.base, d.generators);
}

/// F(a_1..a_n). Over an absolutely algebraic base algebraic generators always
/// give a finite extension, so this agrees with decide_domain.
inline Verdict decide_field_extension(const AffineDescriptor& d) {
  if (!std::holds_alternative<FieldKind>(d.kind))
    throw std::invalid_argument("decide_field_extension: kind must be field");
  return detail::decide_adjunction(d.base, d.generators);
}

/// Necessary conditions for a reduced algebra K_1 x ... x K_m over F to have
/// finitely many maximal subrings: F and every K_i do, each K_i is finite over
/// F, and no infinite K_i is repeated. A single component is decided as the
/// field K_1 itself.
inline Verdict decide_reduced_product(const AffineDescriptor& d) {
  const auto* kind = std::get_if<ReducedProductKind>(&d.kind);
  if (!kind) throw std::invalid_argument("decide_reduced_product: kind must be reduced product");
  const auto& comps = kind->components;
  if (comps.empty()) throw std::invalid_argument("reduced product needs at least one component");
  for (const auto& c : comps) {
    if (c.characteristic != comps.front().characteristic)
      throw std::invalid_argument("reduced product components have mixed characteristics");
  }

  if (std::holds_alternative<CharZero>(d.base)) return InfinitelyMany{InfiniteReason::CharacteristicZero};
  if (std::holds_alternative<NotAbsolutelyAlgebraic>(d.base))
    return InfinitelyMany{InfiniteReason::NotAbsolutelyAlgebraic};
  FieldDescriptor base;
  if (auto closed = std::get_if<AlgebraicallyClosed>(&d.base)) {
    if (!closed->prime) return InfinitelyMany{InfiniteReason::NotAbsolutelyAlgebraic};
    base = FieldDescriptor::closure(*closed->prime);
  } else {
    base = std::get<FieldDescriptor>(d.base);
  }
  if (base.characteristic != comps.front().characteristic)
    throw std::invalid_argument("reduced product components do not share the base characteristic");

  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!is_subfield(base, comps[i]) || !is_natural(degree(comps[i], base)))
      return Violated{"component is not a finite extension of the base", {i + 1}};
  }
  if (comps.size() == 1) return detail::decide_adjunction(comps.front(), {});

  if (!rgmax_count(base).is_finite()) return InfinitelyMany{InfiniteReason::BaseHasInfinitelyMany};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!rgmax_count(comps[i]).is_finite())
      return Violated{"component has infinitely many maximal subrings", {i + 1}};
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (is_natural(comps[i].content)) continue;  // finite field
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i] == comps[j]) return Violated{"repeated infinite component", {i + 1, j + 1}};
    }
  }
  return NecessaryConditionsHold{};
}

/// Dispatches on the descriptor kind.
inline Verdict decide(const AffineDescriptor& d) {
  if (std::holds_alternative<DomainKind>(d.kind)) return decide_domain(d);
  if (std::holds_alternative<FieldKind>(d.kind)) return decide_field_extension(d);
  return decide_reduced_product(d);
}

using VarietyBase = std::variant<FieldDescriptor, AlgebraicallyClosed>;

/// Coordinate ring of an affine variety with the given number of points.
inline Verdict decide_variety(const VarietyBase& base, ExtendedCount point_count) {
  if (point_count.is_finite() && point_count.value() == 0)
    throw std::invalid_argument("decide_variety: a variety needs at least one point");
  FieldDescriptor f;
  if (auto closed = std::get_if<AlgebraicallyClosed>(&base)) {
    if (!closed->prime) return InfinitelyMany{InfiniteReason::NotAbsolutelyAlgebraic};
    f = FieldDescriptor::closure(*closed->prime);
  } else {
    f = std::get<FieldDescriptor>(base);
  }
  if (!point_count.is_finite()) return InfinitelyMany{InfiniteReason::InfinitelyManyPoints};
  if (is_natural(f.content)) return FinitelyMany{};  // F^m is a finite ring
  if (point_count.value() > 1) return InfinitelyMany{InfiniteReason::SeveralPointsOverInfiniteField};
  // F[V] = F
  if (!rgmax_count(f).is_finite()) return InfinitelyMany{InfiniteReason::BaseHasInfinitelyMany};
  return FinitelyMany{f, rgmax_count(f)};
}

}  // namespace steinitz
