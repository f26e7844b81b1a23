#pragma once

// Verification suites: theoretical predictions checked against brute force.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "steinitz/descriptor_io.hpp"
#include "steinitz/field.hpp"
#include "steinitz/predict.hpp"
#include "steinitz/subring_lattice.hpp"

namespace steinitz {

enum class InstanceStatus { Match, Mismatch, BoundExceeded };

inline const char* to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::Match: return "match";
    case InstanceStatus::Mismatch: return "mismatch";
    case InstanceStatus::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

struct InstanceResult {
  std::string name;
  std::string predicted;
  std::string observed;
  bool sets_equal = false;
  InstanceStatus status = InstanceStatus::Mismatch;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<InstanceResult> instances;

  bool all_match() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const auto& i) { return i.status == InstanceStatus::Match; });
  }
  bool any_mismatch() const {
    return std::any_of(instances.begin(), instances.end(),
                       [](const auto& i) { return i.status == InstanceStatus::Mismatch; });
  }
  bool any_bound_exceeded() const {
    return std::any_of(instances.begin(), instances.end(),
                       [](const auto& i) { return i.status == InstanceStatus::BoundExceeded; });
  }
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  RingLimits limits{};
  std::size_t random_descriptors = 100;
};

struct RandomDescriptorOptions {
  std::size_t max_finite_primes = 4;
  std::uint64_t max_exponent = 3;
  // Also draw finite nonzero defaults, which give infinitely many maximal subrings.
  bool allow_finite_default = false;
};

/// A random descriptor over the first eight primes: up to max_finite_primes
/// primes of finite order, a few of infinite order, a default of 0 or inf
/// (or a small finite default when allowed).
inline FieldDescriptor random_descriptor(std::mt19937_64& rng, const RandomDescriptorOptions& opts = {}) {
  static const std::vector<std::uint64_t> characteristics{2, 3, 5, 7, 11};
  std::vector<std::uint64_t> pool = first_primes(8);
  std::shuffle(pool.begin(), pool.end(), rng);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };

  std::uint64_t p = characteristics[uniform(0, characteristics.size() - 1)];
  std::size_t finite = uniform(0, std::min(opts.max_finite_primes, pool.size()));
  std::size_t infinite = std::min<std::size_t>(uniform(0, 2), pool.size() - finite);
  std::size_t zeros = std::min<std::size_t>(uniform(0, 1), pool.size() - finite - infinite);

  SupernaturalNumber::ExponentMap m;
  std::size_t i = 0;
  for (; i < finite; ++i) m[pool[i]] = Exponent{uniform(1, opts.max_exponent)};
  for (; i < finite + infinite; ++i) m[pool[i]] = kInfinity;
  for (; i < finite + infinite + zeros; ++i) m[pool[i]] = Exponent{0};

  Exponent rest{0};
  std::uint64_t pick = uniform(0, opts.allow_finite_default ? 3 : 1);
  if (pick == 1) rest = kInfinity;
  if (pick >= 2) rest = Exponent{pick - 1};
  return {p, SupernaturalNumber(std::move(m), rest)};
}

namespace detail {

inline InstanceResult compare_family(const FamilyInstance& inst, RingLimits limits) {
  InstanceResult r;
  r.name = inst.name();
  try {
    auto c = predict_and_compare(inst, limits);
    r.predicted = std::to_string(c.formula_count);
    r.observed = std::to_string(c.observed.size());
    r.sets_equal = c.sets_equal;
    r.status = c.match() ? InstanceStatus::Match : InstanceStatus::Mismatch;
    r.detail = "ring size " + std::to_string(c.ring_size) + ", " + std::to_string(c.lattice_size) + " subrings";
  } catch (const ResourceLimitExceeded& e) {
    r.status = InstanceStatus::BoundExceeded;
    r.detail = e.what();
  }
  return r;
}

inline std::uint64_t multinomial(const std::vector<std::uint64_t>& parts) {
  // Product of binomials; exact for the small totals used here.
  std::uint64_t total = 0, result = 1;
  for (auto k : parts) {
    for (std::uint64_t i = 1; i <= k; ++i) {
      ++total;
      result = result * total / i;
    }
  }
  return result;
}

}  // namespace detail

/// Maximal subrings of F_{p^n}, p in {2,3}, p^n within the size bound.
inline SuiteReport verify_gf(const VerifyOptions& opts = {}) {
  SuiteReport report{"gf", {}};
  for (std::uint64_t p : {2, 3}) {
    for (std::uint64_t n = 1, q = p; q <= opts.limits.bound(); ++n, q *= p)
      report.instances.push_back(detail::compare_family({Family::Gf, p, n}, opts.limits));
  }
  return report;
}

/// K[e]/(e^2) for |K| in {2,3,4,5,8,9,16}.
inline SuiteReport verify_dual(const VerifyOptions& opts = {}) {
  SuiteReport report{"dual", {}};
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {2, 4}})
    report.instances.push_back(detail::compare_family({Family::Dual, p, n}, opts.limits));
  return report;
}

/// K x K for |K| in {2,3,4,8,9}.
inline SuiteReport verify_product(const VerifyOptions& opts = {}) {
  SuiteReport report{"product", {}};
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}})
    report.instances.push_back(detail::compare_family({Family::Product, p, n}, opts.limits));
  return report;
}

/// Checks every saturated chain of one descriptor: uniform length sum o_T(q),
/// terminus L(E), and a chain count equal to the multinomial coefficient of
/// the finite-part exponents.
inline InstanceResult check_chains(const FieldDescriptor& e) {
  InstanceResult r;
  r.name = render(e);
  Parts parts_of_e = parts(e.fg_set());
  std::vector<std::uint64_t> exps;
  std::uint64_t m = 0;
  for (auto q : parts_of_e.finite_part.listed) {
    exps.push_back(e.content.exponent(q).value());
    m += exps.back();
  }
  FieldDescriptor terminus = largest_nonsubmaximal(e);
  std::uint64_t expected_count = detail::multinomial(exps);
  r.predicted = "length=" + std::to_string(m) + " chains=" + std::to_string(expected_count);

  std::uint64_t min_len = std::numeric_limits<std::uint64_t>::max(), max_len = 0;
  bool termini_ok = true;
  try {
    std::uint64_t count = for_each_chain(e, [&](const std::vector<FieldDescriptor>& chain) {
      std::uint64_t len = chain.size() - 1;
      min_len = std::min(min_len, len);
      max_len = std::max(max_len, len);
      termini_ok = termini_ok && chain.back() == terminus && chain.front() == e;
    });
    r.observed = "length=" + (min_len == max_len ? std::to_string(min_len)
                                                 : std::to_string(min_len) + ".." + std::to_string(max_len)) +
                 " chains=" + std::to_string(count);
    r.sets_equal = termini_ok;
    bool ok = termini_ok && min_len == m && max_len == m && count == expected_count;
    r.status = ok ? InstanceStatus::Match : InstanceStatus::Mismatch;
    if (!termini_ok) r.detail = "a chain does not end at L(E)";
  } catch (const ResourceLimitExceeded& ex) {
    r.status = InstanceStatus::BoundExceeded;
    r.detail = ex.what();
  }
  return r;
}

/// Subring-lattice chains of gf(p,n) against chain_stats of F_{p^n}.
inline InstanceResult check_lattice_chains(std::uint64_t p, std::uint64_t n, RingLimits limits) {
  InstanceResult r;
  r.name = "lattice-chains gf(" + std::to_string(p) + "," + std::to_string(n) + ")";
  try {
    auto stats = chain_stats(FieldDescriptor::finite(p, n), false);
    auto lattice = enumerate_subrings(make_gf(p, n, limits));
    auto chains = saturated_chains(lattice);
    bool lengths_ok = std::all_of(chains.chains.begin(), chains.chains.end(),
                                  [&](const auto& c) { return c.size() - 1 == stats.length; });
    r.predicted = "length=" + std::to_string(stats.length) + " chains=" + std::to_string(stats.chain_count);
    r.observed = "chains=" + std::to_string(chains.chains.size()) +
                 (chains.uniform_length.value_or(false) ? " uniform" : " non-uniform");
    r.sets_equal = lengths_ok;
    bool ok = lengths_ok && chains.uniform_length.value_or(false) && chains.chains.size() == stats.chain_count &&
              stats.length == big_omega(n);
    r.status = ok ? InstanceStatus::Match : InstanceStatus::Mismatch;
  } catch (const ResourceLimitExceeded& ex) {
    r.status = InstanceStatus::BoundExceeded;
    r.detail = ex.what();
  }
  return r;
}

inline SuiteReport verify_chains(const VerifyOptions& opts = {}) {
  SuiteReport report{"chains", {}};
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.random_descriptors; ++i)
    report.instances.push_back(check_chains(random_descriptor(rng)));
  report.instances.push_back(check_lattice_chains(2, 12, opts.limits));
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gf", "dual", "product", "chains", "all"};
  return names;
}

inline std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opts = {}) {
  if (name == "gf") return {verify_gf(opts)};
  if (name == "dual") return {verify_dual(opts)};
  if (name == "product") return {verify_product(opts)};
  if (name == "chains") return {verify_chains(opts)};
  if (name == "all") return {verify_gf(opts), verify_dual(opts), verify_product(opts), verify_chains(opts)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace steinitz
