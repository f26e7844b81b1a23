#pragma once

// Text forms of supernatural numbers, field descriptors and affine descriptors.
//
//   content  := FACTORS [; rest=EXPO] [; universe=p1,p2,...]
//   FACTORS  := 1 | prime[^EXPO] {, prime[^EXPO]}
//   EXPO     := decimal | inf
//   field    := char=<p>; content
//   affine   := affine: base=BASE [; gens=GEN {, GEN}] [; kind=KIND]
//   BASE     := field | char0 | nonalg | closed | closed(<p>)
//   GEN      := alg(<k>) | transc
//   KIND     := domain | field | product(field {| field})
//
// render_* produce the canonical text; parse(render(x)) == x.

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "steinitz/affine.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/field.hpp"
#include "steinitz/supernatural.hpp"

namespace steinitz {

using Descriptor = std::variant<FieldDescriptor, AffineDescriptor>;

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(std::string_view word) {
    skip_ws();
    return text_.substr(pos_).starts_with(word);
  }

  bool accept(std::string_view word) {
    if (!peek(word)) return false;
    pos_ += word.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) { throw ParseError(message, at); }

  std::size_t position() const { return pos_; }
  void rewind(std::size_t at) { pos_ = at; }

  std::uint64_t number(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - 1 - digit) / 10)
        fail_at(std::string(what) + " overflow", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::uint64_t prime(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t p = number(what);
    if (!is_prime(p)) fail_at(std::to_string(p) + " is not prime", start);
    return p;
  }

  Exponent exponent() {
    if (accept("inf")) return kInfinity;
    return Exponent{number("exponent")};
  }

  SupernaturalNumber content() {
    SupernaturalNumber::ExponentMap factors;
    std::vector<std::pair<std::uint64_t, std::size_t>> factor_offsets;
    skip_ws();
    std::size_t list_start = pos_;
    std::uint64_t first = number("factor");
    bool empty_product = first == 1 && !peek("^");
    if (!empty_product) {
      rewind(list_start);
      do {
        skip_ws();
        std::size_t at = pos_;
        std::uint64_t q = prime("prime factor");
        Exponent e{1};
        if (accept("^")) e = exponent();
        if (!factors.emplace(q, e).second) fail_at("repeated prime " + std::to_string(q), at);
        factor_offsets.emplace_back(q, at);
      } while (accept(","));
    }

    Exponent rest{0};
    std::optional<std::vector<std::uint64_t>> universe;
    bool seen_rest = false;
    while (true) {
      std::size_t before = position();
      if (!accept(";")) break;
      if (!seen_rest && accept("rest=")) {
        rest = exponent();
        seen_rest = true;
      } else if (!universe && accept("universe=")) {
        universe.emplace();
        std::set<std::uint64_t> seen;
        do {
          skip_ws();
          std::size_t at = pos_;
          std::uint64_t q = prime("universe prime");
          if (!seen.insert(q).second) fail_at("repeated prime " + std::to_string(q), at);
          universe->push_back(q);
        } while (accept(","));
      } else {
        rewind(before);
        break;
      }
    }
    Universe u = universe ? Universe::finite(*universe) : Universe::all_primes();
    for (const auto& [q, at] : factor_offsets) {
      if (!u.contains(q)) fail_at("prime " + std::to_string(q) + " lies outside the universe", at);
    }
    return SupernaturalNumber(std::move(factors), rest, std::move(u));
  }

  FieldDescriptor field() {
    expect("char=");
    std::uint64_t p = prime("characteristic");
    expect(";");
    return FieldDescriptor{p, content()};
  }

  AffineBase base() {
    if (accept("char0")) return CharZero{};
    if (accept("nonalg")) return NotAbsolutelyAlgebraic{};
    if (accept("closed")) {
      AlgebraicallyClosed c;
      if (accept("(")) {
        c.prime = prime("characteristic");
        expect(")");
      }
      return c;
    }
    if (peek("char=")) return field();
    fail("expected base field");
  }

  AffineDescriptor affine() {
    expect("affine:");
    AffineDescriptor d;
    expect("base=");
    d.base = base();
    bool seen_gens = false, seen_kind = false;
    while (accept(";")) {
      if (!seen_gens && accept("gens=")) {
        seen_gens = true;
        if (peek("alg") || peek("transc")) {
          do {
            if (accept("transc")) {
              d.generators.push_back(Transcendental{});
            } else {
              expect("alg(");
              skip_ws();
              std::size_t at = pos_;
              std::uint64_t k = number("container degree");
              if (k == 0) fail_at("container degree must be >= 1", at);
              expect(")");
              d.generators.push_back(Algebraic{k});
            }
          } while (accept(","));
        }
      } else if (!seen_kind && accept("kind=")) {
        seen_kind = true;
        if (accept("domain")) {
          d.kind = DomainKind{};
        } else if (accept("field")) {
          d.kind = FieldKind{};
        } else if (accept("product(")) {
          ReducedProductKind k;
          do {
            k.components.push_back(field());
          } while (accept("|"));
          expect(")");
          d.kind = std::move(k);
        } else {
          fail("expected domain, field or product(...)");
        }
      } else {
        fail("expected gens= or kind=");
      }
    }
    return d;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SupernaturalNumber parse_supernatural(std::string_view text) {
  detail::DescriptorParser p(text);
  auto s = p.content();
  p.finish();
  return s;
}

inline FieldDescriptor parse_field(std::string_view text) {
  detail::DescriptorParser p(text);
  auto f = p.field();
  p.finish();
  return f;
}

inline AffineDescriptor parse_affine(std::string_view text) {
  detail::DescriptorParser p(text);
  auto a = p.affine();
  p.finish();
  return a;
}

inline Descriptor parse_descriptor(std::string_view text) {
  detail::DescriptorParser p(text);
  if (p.peek("affine:")) {
    auto a = p.affine();
    p.finish();
    return a;
  }
  auto f = p.field();
  p.finish();
  return f;
}

/// Comma-separated naturals, e.g. "1,2,3,6".
inline std::set<std::uint64_t> parse_natural_set(std::string_view text) {
  detail::DescriptorParser p(text);
  std::set<std::uint64_t> out;
  if (p.at_end()) return out;
  do {
    out.insert(p.number("natural"));
  } while (p.accept(","));
  p.finish();
  return out;
}

inline std::string render(const SupernaturalNumber& s) {
  // Exponent-0 exceptions only occur over a nonzero default and are kept as q^0.
  std::string out;
  for (const auto& [q, e] : s.exceptions()) {
    if (!out.empty()) out += ",";
    out += std::to_string(q);
    if (e != Exponent{1}) out += "^" + e.to_string();
  }
  if (out.empty()) out = "1";
  if (!s.rest().is_zero()) out += "; rest=" + s.rest().to_string();
  if (!s.universe().is_all()) {
    out += "; universe=";
    const auto& primes = s.universe().primes();
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + std::to_string(primes[i]);
  }
  return out;
}

inline std::string render(const FieldDescriptor& f) {
  return "char=" + std::to_string(f.characteristic) + "; " + render(f.content);
}

inline std::string render(const AffineDescriptor& d) {
  std::string out = "affine: base=";
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, FieldDescriptor>) out += render(b);
        else if constexpr (std::is_same_v<T, CharZero>) out += "char0";
        else if constexpr (std::is_same_v<T, NotAbsolutelyAlgebraic>) out += "nonalg";
        else out += b.prime ? "closed(" + std::to_string(*b.prime) + ")" : std::string("closed");
      },
      d.base);
  if (!d.generators.empty()) {
    out += "; gens=";
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      if (i) out += ",";
      if (auto a = std::get_if<Algebraic>(&d.generators[i])) out += "alg(" + std::to_string(a->container_degree) + ")";
      else out += "transc";
    }
  }
  out += "; kind=";
  if (std::holds_alternative<DomainKind>(d.kind)) {
    out += "domain";
  } else if (std::holds_alternative<FieldKind>(d.kind)) {
    out += "field";
  } else {
    out += "product(";
    const auto& comps = std::get<ReducedProductKind>(d.kind).components;
    for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? " | " : "") + render(comps[i]);
    out += ")";
  }
  return out;
}

inline std::string render(const Descriptor& d) {
  return std::visit([](const auto& x) { return render(x); }, d);
}

}  // namespace steinitz
