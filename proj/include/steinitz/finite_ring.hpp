#pragma once

// Explicit finite commutative unital rings given by Cayley tables, plus
// constructors for F_{p^n}, direct products and dual numbers K[e]/(e^2).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "steinitz/errors.hpp"
#include "steinitz/primes.hpp"

namespace steinitz {

enum class Provenance { Gf, Product, Dual, Tables };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Gf: return "gf";
    case Provenance::Product: return "product";
    case Provenance::Dual: return "dual";
    case Provenance::Tables: return "tables";
  }
  return "?";
}

// Tables are stored with 16-bit entries.
inline constexpr std::size_t kHardRingSizeLimit = 65536;

struct RingLimits {
  std::size_t max_size = 4096;

  std::size_t bound() const { return std::min(max_size, kHardRingSizeLimit); }
};

class FiniteRing {
 public:
  using Element = std::uint32_t;

  struct Tables {
    std::size_t size = 0;
    std::vector<Element> add;  // row-major size x size
    std::vector<Element> mul;
    Element zero = 0;
    Element one = 1;
    std::vector<std::string> labels;  // defaults to decimal indices
  };

  /// Builds a ring from tables and verifies the commutative ring axioms
  /// (exhaustively over pairs; over triples exhaustively up to 64 elements,
  /// by 10^5 seeded random triples above). Throws std::invalid_argument on
  /// any violation.
  static FiniteRing from_tables(Tables t, RingLimits limits = {},
                                Provenance provenance = Provenance::Tables,
                                std::string description = "tables") {
    FiniteRing r;
    r.init(std::move(t), limits, provenance, std::move(description));
    if (auto failure = r.check_axioms()) throw std::invalid_argument("not a commutative unital ring: " + *failure);
    return r;
  }

  std::size_t size() const { return size_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  Element add(Element a, Element b) const { return add_[a * size_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * size_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Provenance provenance() const { return provenance_; }
  const std::string& description() const { return description_; }

  Element pow(Element a, std::uint64_t e) const {
    Element result = one_;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  bool is_field() const {
    for (Element a = 0; a < size_; ++a) {
      if (a == zero_) continue;
      bool invertible = false;
      for (Element b = 0; b < size_ && !invertible; ++b) invertible = mul(a, b) == one_;
      if (!invertible) return false;
    }
    return true;
  }

  /// Description of the first violated axiom, if any.
  std::optional<std::string> check_axioms(std::uint64_t seed = 0x5eed) const {
    auto name = [&](Element a) { return labels_[a]; };
    if (zero_ == one_) return "zero equals one";
    for (Element a = 0; a < size_; ++a) {
      if (add(zero_, a) != a) return "zero is not an additive identity for " + name(a);
      if (mul(one_, a) != a) return "one is not a multiplicative identity for " + name(a);
      if (add(a, neg(a)) != zero_) return name(a) + " has no additive inverse";
      for (Element b = a + 1; b < size_; ++b) {
        if (add(a, b) != add(b, a)) return "addition not commutative at " + name(a) + "," + name(b);
        if (mul(a, b) != mul(b, a)) return "multiplication not commutative at " + name(a) + "," + name(b);
      }
    }
    auto check_triple = [&](Element a, Element b, Element c) -> std::optional<std::string> {
      std::string at = " at " + name(a) + "," + name(b) + "," + name(c);
      if (add(add(a, b), c) != add(a, add(b, c))) return "addition not associative" + at;
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplication not associative" + at;
      if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "not distributive" + at;
      return std::nullopt;
    };
    if (size_ <= 64) {
      for (Element a = 0; a < size_; ++a)
        for (Element b = 0; b < size_; ++b)
          for (Element c = 0; c < size_; ++c)
            if (auto f = check_triple(a, b, c)) return f;
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(size_ - 1));
      for (int i = 0; i < 100'000; ++i) {
        if (auto f = check_triple(pick(rng), pick(rng), pick(rng))) return f;
      }
    }
    return std::nullopt;
  }

 private:
  void init(Tables t, RingLimits limits, Provenance provenance, std::string description) {
    std::size_t n = t.size;
    if (n == 0) throw std::invalid_argument("empty ring");
    if (n > limits.bound())
      throw ResourceLimitExceeded("ring of size " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(limits.bound()));
    if (t.add.size() != n * n || t.mul.size() != n * n) throw std::invalid_argument("table size mismatch");
    if (t.zero >= n || t.one >= n) throw std::invalid_argument("identity out of range");
    size_ = n;
    zero_ = t.zero;
    one_ = t.one;
    add_.resize(n * n);
    mul_.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (t.add[i] >= n || t.mul[i] >= n) throw std::invalid_argument("table entry out of range");
      add_[i] = t.add[i];
      mul_[i] = t.mul[i];
    }
    neg_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element b = 0; b < n && !found; ++b) {
        if (add(a, b) == zero_) {
          neg_[a] = b;
          found = true;
        }
      }
      if (!found) neg_[a] = a;  // reported by check_axioms
    }
    labels_ = std::move(t.labels);
    if (labels_.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) throw std::invalid_argument("label count mismatch");
    provenance_ = provenance;
    description_ = std::move(description);
  }

  std::size_t size_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<Element> neg_;
  Element zero_ = 0;
  Element one_ = 1;
  std::vector<std::string> labels_;
  Provenance provenance_ = Provenance::Tables;
  std::string description_;
};

using Element = FiniteRing::Element;

namespace detail {

using Poly = std::vector<std::uint64_t>;  // coefficients, constant term first

inline Poly poly_from_index(std::uint64_t idx, std::uint64_t p, std::uint64_t len) {
  Poly c(len);
  for (auto& x : c) {
    x = idx % p;
    idx /= p;
  }
  return c;
}

inline std::uint64_t index_from_poly(const Poly& c, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) idx = idx * p + *it;
  return idx;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Remainder of a modulo a monic divisor.
inline Poly poly_rem(Poly a, const Poly& monic, std::uint64_t p) {
  std::size_t d = monic.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] = (a[i - d + j] + (p - c) * monic[j]) % p;
  }
  a.resize(std::min(a.size(), d));
  return a;
}

inline bool poly_is_zero(const Poly& a) {
  for (auto x : a) if (x) return false;
  return true;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  Poly r = poly_rem(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

inline std::string poly_label(const Poly& c, std::uint64_t p) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] % p == 0) continue;
    if (!out.empty()) out += "+";
    std::string coef = c[i] == 1 && i > 0 ? "" : std::to_string(c[i]);
    if (i == 0) out += coef;
    else if (i == 1) out += coef + "x";
    else out += coef + "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::uint64_t checked_power(std::uint64_t p, std::uint64_t n, std::uint64_t bound) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q > bound / p) return bound + 1;
    q *= p;
  }
  return q;
}

}  // namespace detail

/// Monic irreducible polynomial of degree n over F_p with the smallest
/// encoding sum c_i p^i (compare top coefficient first), found by exhaustive
/// trial division. Coefficients constant term first, leading 1 included.
inline std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("degree must be >= 1");
  std::uint64_t count = detail::checked_power(p, n, std::uint64_t{1} << 40);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    detail::Poly f = detail::poly_from_index(idx, p, n);
    f.push_back(1);
    if (n == 1) return f;
    if (f[0] == 0) continue;
    bool irreducible = true;
    for (std::uint64_t d = 1; d <= n / 2 && irreducible; ++d) {
      std::uint64_t divisors = detail::checked_power(p, d, std::uint64_t{1} << 40);
      for (std::uint64_t g_idx = 0; g_idx < divisors && irreducible; ++g_idx) {
        detail::Poly g = detail::poly_from_index(g_idx, p, d);
        g.push_back(1);
        if (detail::poly_is_zero(detail::poly_rem(f, g, p))) irreducible = false;
      }
    }
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

/// F_{p^n} as polynomials over F_p modulo smallest_irreducible(p, n). Element
/// index i encodes the polynomial whose coefficient of x^k is the k-th base-p
/// digit of i, so 0 and 1 are the identities and 0..p-1 the prime field.
inline FiniteRing make_gf(std::uint64_t p, std::uint64_t n, RingLimits limits = {}) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("gf: n must be >= 1");
  std::uint64_t q = detail::checked_power(p, n, limits.bound());
  if (q > limits.bound())
    throw ResourceLimitExceeded("gf(" + std::to_string(p) + "," + std::to_string(n) + ") exceeds bound " +
                                std::to_string(limits.bound()));
  auto modulus = smallest_irreducible(p, n);

  std::vector<detail::Poly> polys(q);
  for (std::uint64_t i = 0; i < q; ++i) polys[i] = detail::poly_from_index(i, p, n);

  // Exponential/logarithm tables from a primitive element.
  std::vector<Element> exp_table(q - 1), log_table(q, 0);
  for (std::uint64_t g = 1; g < q; ++g) {
    detail::Poly x = polys[1];
    std::uint64_t ord = 0;
    std::uint64_t cur = 1;
    do {
      exp_table[ord] = static_cast<Element>(cur);
      x = detail::poly_mul_mod(polys[cur], polys[g], modulus, p);
      cur = detail::index_from_poly(x, p);
      ++ord;
    } while (cur != 1 && ord < q - 1);
    if (cur == 1 && ord == q - 1) break;
  }
  for (std::uint64_t k = 0; k + 1 < q; ++k) log_table[exp_table[k]] = static_cast<Element>(k);

  FiniteRing::Tables t;
  t.size = q;
  t.zero = 0;
  t.one = 1;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      std::uint64_t sum = 0;
      if (p == 2) {
        sum = a ^ b;
      } else {
        std::uint64_t x = a, y = b, place = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
          sum += ((x % p + y % p) % p) * place;
          x /= p;
          y /= p;
          place *= p;
        }
      }
      t.add[a * q + b] = static_cast<Element>(sum);
      t.mul[a * q + b] =
          (a == 0 || b == 0) ? 0 : exp_table[(log_table[a] + log_table[b]) % (q - 1)];
    }
  }
  for (std::uint64_t i = 0; i < q; ++i) t.labels.push_back(detail::poly_label(polys[i], p));
  return FiniteRing::from_tables(std::move(t), limits, Provenance::Gf,
                                 "gf(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

/// Index of (a, b) in make_product(R, S).
inline Element product_index(Element a, Element b, std::size_t right_size) {
  return static_cast<Element>(a * right_size + b);
}

inline FiniteRing make_product(const FiniteRing& r, const FiniteRing& s, RingLimits limits = {}) {
  std::size_t n = r.size() * s.size();
  if (n > limits.bound())
    throw ResourceLimitExceeded("product of size " + std::to_string(n) + " exceeds bound " +
                                std::to_string(limits.bound()));
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::size_t m = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element a1 = static_cast<Element>(a / m), a2 = static_cast<Element>(a % m);
      Element b1 = static_cast<Element>(b / m), b2 = static_cast<Element>(b % m);
      t.add[a * n + b] = product_index(r.add(a1, b1), s.add(a2, b2), m);
      t.mul[a * n + b] = product_index(r.mul(a1, b1), s.mul(a2, b2), m);
    }
  }
  t.zero = product_index(r.zero(), s.zero(), m);
  t.one = product_index(r.one(), s.one(), m);
  for (Element a = 0; a < n; ++a) t.labels.push_back("(" + r.label(a / m) + "," + s.label(a % m) + ")");
  return FiniteRing::from_tables(std::move(t), limits, Provenance::Product,
                                 "product(" + r.description() + "," + s.description() + ")");
}

/// Index of a + b*e in make_dual(K); the constants occupy 0..|K|-1.
inline Element dual_index(Element a, Element b, std::size_t base_size) {
  return static_cast<Element>(a + base_size * b);
}

/// K[x]/(x^2) = K + K e with e^2 = 0. K must be a field.
inline FiniteRing make_dual(const FiniteRing& k, RingLimits limits = {}) {
  if (!k.is_field()) throw std::invalid_argument("dual: base ring is not a field");
  std::size_t m = k.size();
  std::size_t n = m * m;
  if (n > limits.bound())
    throw ResourceLimitExceeded("dual ring of size " + std::to_string(n) + " exceeds bound " +
                                std::to_string(limits.bound()));
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element a = static_cast<Element>(x % m), b = static_cast<Element>(x / m);
      Element c = static_cast<Element>(y % m), d = static_cast<Element>(y / m);
      t.add[x * n + y] = dual_index(k.add(a, c), k.add(b, d), m);
      t.mul[x * n + y] = dual_index(k.mul(a, c), k.add(k.mul(a, d), k.mul(b, c)), m);
    }
  }
  t.zero = dual_index(k.zero(), k.zero(), m);
  t.one = dual_index(k.one(), k.zero(), m);
  for (Element x = 0; x < n; ++x)
    t.labels.push_back("(" + k.label(x % m) + ")+(" + k.label(x / m) + ")e");
  return FiniteRing::from_tables(std::move(t), limits, Provenance::Dual, "dual(" + k.description() + ")");
}

}  // namespace steinitz
