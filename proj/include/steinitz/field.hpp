#pragma once

// Absolutely algebraic fields, i.e. subfields of the algebraic closure of F_p,
// described by characteristic plus Steinitz number.
//
// Maximal subrings of such a field E correspond to the primes q of finite
// nonzero order in FG(E): lowering the exponent of q by one gives the
// maximal subfield, and every maximal subring arises this way. Every
// descending chain of maximal subrings from E therefore ends, after
// sum_q o_T(q) steps, in L(E), the field keeping only the infinite exponents.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/errors.hpp"
#include "steinitz/fgset.hpp"
#include "steinitz/supernatural.hpp"

namespace steinitz {

struct FieldDescriptor {
  std::uint64_t characteristic = 2;
  SupernaturalNumber content;

  FieldDescriptor() = default;
  FieldDescriptor(std::uint64_t p, SupernaturalNumber c) : characteristic(p), content(std::move(c)) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }

  /// F_{p^n}.
  static FieldDescriptor finite(std::uint64_t p, std::uint64_t n) {
    return {p, SupernaturalNumber::from_natural(n)};
  }
  /// The algebraic closure of F_p.
  static FieldDescriptor closure(std::uint64_t p) { return {p, SupernaturalNumber::full()}; }

  FGSet fg_set() const { return FGSet(content); }

  bool operator==(const FieldDescriptor&) const = default;
};

inline bool is_subfield(const FieldDescriptor& f, const FieldDescriptor& e) {
  return f.characteristic == e.characteristic && divides(f.content, e.content);
}

namespace detail {
inline void require_same_characteristic(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.characteristic != b.characteristic) throw DomainError("characteristic mismatch");
}
inline void require_subfield(const FieldDescriptor& f, const FieldDescriptor& e) {
  require_same_characteristic(f, e);
  if (!divides(f.content, e.content)) throw DomainError("field is not a subfield of the extension");
}
}  // namespace detail

inline FieldDescriptor compositum(const FieldDescriptor& a, const FieldDescriptor& b) {
  detail::require_same_characteristic(a, b);
  return {a.characteristic, join(a.content, b.content)};
}

inline FieldDescriptor intersection(const FieldDescriptor& a, const FieldDescriptor& b) {
  detail::require_same_characteristic(a, b);
  return {a.characteristic, meet(a.content, b.content)};
}

/// |RgMax(E)| = |T_f|.
inline ExtendedCount rgmax_count(const FieldDescriptor& e) {
  return parts(e.fg_set()).finite_count;
}

inline std::vector<FieldDescriptor> rgmax_list(const FieldDescriptor& e) {
  auto subsets = maximal_fg_subsets(e.fg_set());
  if (!subsets.count.is_finite()) {
    throw InfiniteCountError("field has countably infinitely many maximal subrings",
                             parts(e.fg_set()).finite_part.to_string());
  }
  std::vector<FieldDescriptor> out;
  out.reserve(subsets.subsets.size());
  for (auto& t : subsets.subsets) out.push_back({e.characteristic, t.steinitz()});
  return out;
}

/// The maximal subring of E obtained at prime q of T_f.
inline FieldDescriptor maximal_subfield_at(const FieldDescriptor& e, std::uint64_t q) {
  return {e.characteristic, lower_at(e.fg_set(), q).steinitz()};
}

/// L(E): keep infinite exponents, zero out every finite one.
inline FieldDescriptor largest_nonsubmaximal(const FieldDescriptor& e) {
  auto keep_infinite = [](Exponent x) { return x.is_infinite() ? kInfinity : Exponent{0}; };
  SupernaturalNumber::ExponentMap m;
  for (const auto& [q, x] : e.content.exceptions()) m[q] = keep_infinite(x);
  return {e.characteristic,
          SupernaturalNumber(std::move(m), keep_infinite(e.content.rest()), e.content.universe())};
}

/// [E:F] as a supernatural number.
inline SupernaturalNumber degree(const FieldDescriptor& e, const FieldDescriptor& f) {
  detail::require_subfield(f, e);
  return quotient(e.content, f.content);
}

struct ChainReport {
  std::uint64_t length = 0;
  std::uint64_t chain_count = 0;
  // Each chain lists R_0 = E, R_1, ..., R_length = terminus.
  std::optional<std::vector<std::vector<FieldDescriptor>>> chains;
  FieldDescriptor terminus;
};

inline constexpr std::uint64_t kDefaultChainCap = 1'000'000;

/// Calls `visit` once per saturated descending chain of maximal subrings from
/// E down to L(E), in lexicographic order of the lowered primes. The chain is
/// only valid during the call. Returns the number of chains.
inline std::uint64_t for_each_chain(
    const FieldDescriptor& e,
    const std::function<void(const std::vector<FieldDescriptor>&)>& visit,
    std::uint64_t max_chains = kDefaultChainCap) {
  Parts p = parts(e.fg_set());
  if (!p.finite_count.is_finite()) {
    throw InfiniteCountError("infinite finite part: an infinite descending chain exists",
                             p.finite_part.to_string());
  }
  const auto& primes = p.finite_part.listed;
  std::vector<std::uint64_t> remaining;
  for (auto q : primes) remaining.push_back(e.content.exponent(q).value());

  std::vector<FieldDescriptor> path{e};
  std::uint64_t count = 0;
  std::function<void()> descend = [&]() {
    bool leaf = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (remaining[i] == 0) continue;
      leaf = false;
      --remaining[i];
      path.push_back(maximal_subfield_at(path.back(), primes[i]));
      if (!is_maximal_fg_subset(path.back().fg_set(), path[path.size() - 2].fg_set()))
        throw std::logic_error("chain step is not a maximal subring");
      descend();
      path.pop_back();
      ++remaining[i];
    }
    if (leaf) {
      if (++count > max_chains) throw ResourceLimitExceeded("chain enumeration cap exceeded");
      if (visit) visit(path);
    }
  };
  descend();
  return count;
}

inline ChainReport chain_stats(const FieldDescriptor& e, bool list_chains,
                               std::uint64_t max_chains = kDefaultChainCap) {
  ChainReport report;
  report.terminus = largest_nonsubmaximal(e);
  Parts p = parts(e.fg_set());
  if (!p.finite_count.is_finite()) {
    throw InfiniteCountError("infinite finite part: an infinite descending chain exists",
                             p.finite_part.to_string());
  }
  for (auto q : p.finite_part.listed) report.length += e.content.exponent(q).value();
  if (list_chains) report.chains.emplace();
  report.chain_count = for_each_chain(
      e,
      [&](const std::vector<FieldDescriptor>& chain) {
        if (report.chains) report.chains->push_back(chain);
      },
      max_chains);
  return report;
}

/// Number of fields K with F <= K <= E; requires [E:F] finite.
inline ExtendedCount intermediate_count(const FieldDescriptor& e, const FieldDescriptor& f) {
  SupernaturalNumber d = degree(e, f);
  if (!is_natural(d)) throw DomainError("intermediate_count: extension is not finite");
  std::uint64_t count = 1;
  for (const auto& [q, x] : d.exceptions()) {
    if (count > std::numeric_limits<std::uint64_t>::max() / (x.value() + 1))
      throw std::overflow_error("intermediate count exceeds 64 bits");
    count *= x.value() + 1;
  }
  return ExtendedCount::finite(count);
}

/// Every proper subring embeds in a maximal one iff T_inf is empty.
inline bool embeds_all(const FieldDescriptor& e) { return parts(e.fg_set()).infinite_part.empty(); }

struct Embedding {
  std::optional<FieldDescriptor> maximal;      // set when F embeds
  std::optional<std::uint64_t> lowered_prime;  // prime lowered to build `maximal`
  std::optional<std::uint64_t> blocking_prime; // prime of infinite order in E, finite in F
};

namespace detail {
// Smallest prime not among `keys` (the first prime carrying the default exponent).
inline std::uint64_t smallest_default_prime(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  std::uint64_t q = 2;
  while (a.exceptions().contains(q) || b.exceptions().contains(q)) q = next_prime(q);
  return q;
}
}  // namespace detail

/// A maximal subring of E containing F, lowering the smallest admissible prime;
/// otherwise the smallest prime of infinite order in E that F does not exhaust.
inline Embedding embed_in_maximal(const FieldDescriptor& e, const FieldDescriptor& f) {
  detail::require_subfield(f, e);
  if (f == e) throw DomainError("embed_in_maximal: F must be a proper subfield");
  const auto& se = e.content;
  const auto& sf = f.content;

  std::optional<std::uint64_t> admissible;
  std::optional<std::uint64_t> blocking;
  auto consider = [&](std::uint64_t q) {
    Exponent x = se.exponent(q);
    Exponent y = sf.exponent(q);
    if (x.is_finite() && y < x) {
      if (!admissible || q < *admissible) admissible = q;
    } else if (x.is_infinite() && y.is_finite()) {
      if (!blocking || q < *blocking) blocking = q;
    }
  };
  for (const auto& kv : se.exceptions()) consider(kv.first);
  for (const auto& kv : sf.exceptions()) consider(kv.first);
  if (se.universe().is_all() && se.rest() != sf.rest()) consider(detail::smallest_default_prime(se, sf));

  Embedding out;
  if (admissible) {
    out.lowered_prime = admissible;
    out.maximal = maximal_subfield_at(e, *admissible);
  } else {
    out.blocking_prime = blocking;
  }
  return out;
}

/// E <= K finite: rgmax(E) finite <=> rgmax(K) finite. Returns whether the
/// equivalence holds for this pair.
inline bool finiteness_transfer(const FieldDescriptor& e, const FieldDescriptor& k) {
  if (!is_natural(degree(k, e))) throw DomainError("finiteness_transfer: extension is not finite");
  return rgmax_count(e).is_finite() == rgmax_count(k).is_finite();
}

}  // namespace steinitz
