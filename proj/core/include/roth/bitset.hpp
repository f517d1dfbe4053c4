#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace roth {

// Fixed-length bitset sized at runtime. Used for dense membership tables and
// for the word-parallel neighbourhood intersections in triangle enumeration.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

  void set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  // Calls fn(i) for every set bit in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

 private:
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// |a & b| without materialising the intersection. Sizes must match.
inline std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept {
  std::size_t total = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) total += static_cast<std::size_t>(std::popcount(wa[w] & wb[w]));
  return total;
}

/// Calls fn(i) for every i set in both a and b, in increasing order.
template <typename Fn>
void for_each_common(const Bitset& a, const Bitset& b, Fn&& fn) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    for (std::uint64_t bits = wa[w] & wb[w]; bits; bits &= bits - 1)
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
}

}  // namespace roth
