#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace steinitz {

/// Subset of the elements 0..size-1 of a finite ring, as a packed bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size) : size_(universe_size), words_((universe_size + 63) / 64) {}

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    }
    return out;
  }

  bool operator==(const ElementSet&) const = default;

  /// Canonical order: by cardinality, then lexicographically by sorted element list.
  std::strong_ordering operator<=>(const ElementSet& other) const {
    if (auto c = count() <=> other.count(); c != 0) return c;
    auto a = elements();
    auto b = other.elements();
    return a <=> b;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace steinitz
