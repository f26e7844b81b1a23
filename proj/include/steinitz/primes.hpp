#pragma once

// Primality and factorisation of 64-bit naturals.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace steinitz {

namespace detail {

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n must be odd and composite.
inline std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += batch;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Prime factorisation as prime -> multiplicity. factorize(1) is empty.
inline std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  std::map<std::uint64_t, std::uint64_t> factors;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  }
  std::vector<std::uint64_t> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    std::uint64_t m = pending.back();
    pending.pop_back();
    if (is_prime(m)) {
      ++factors[m];
      continue;
    }
    std::uint64_t d = detail::find_factor(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  return factors;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = 1;
  while (out.size() < count) {
    p = next_prime(p);
    out.push_back(p);
  }
  return out;
}

/// Number of distinct prime divisors.
inline std::uint64_t omega(std::uint64_t n) { return factorize(n).size(); }

/// Number of prime divisors counted with multiplicity.
inline std::uint64_t big_omega(std::uint64_t n) {
  std::uint64_t total = 0;
  for (const auto& [p, e] : factorize(n)) total += e;
  return total;
}

}  // namespace steinitz
