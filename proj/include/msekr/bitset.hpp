#ifndef MSEKR_BITSET_HPP
#define MSEKR_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace msekr {

/// Fixed-capacity packed bitset with word-parallel set algebra. All operands
/// of a binary operation must have the same capacity.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kBits = 64;

  Bitset() = default;
  explicit Bitset(int capacity)
      : capacity_(capacity),
        words_(static_cast<std::size_t>((capacity + kBits - 1) / kBits), 0) {}

  int capacity() const noexcept { return capacity_; }

  void set(int i) noexcept { words_[word(i)] |= mask(i); }
  void reset(int i) noexcept { words_[word(i)] &= ~mask(i); }
  bool test(int i) const noexcept { return (words_[word(i)] & mask(i)) != 0; }

  void set_all() noexcept {
    for (auto& w : words_) {
      w = ~Word{0};
    }
    trim();
  }

  int count() const noexcept {
    int total = 0;
    for (Word w : words_) {
      total += std::popcount(w);
    }
    return total;
  }

  bool none() const noexcept {
    for (Word w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Lowest set bit, or -1.
  int first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<int>(i) * kBits + std::countr_zero(words_[i]);
      }
    }
    return -1;
  }

  /// Lowest set bit strictly above `i`, or -1.
  int next(int i) const noexcept {
    ++i;
    if (i >= capacity_) {
      return -1;
    }
    std::size_t w = word(i);
    Word bits = words_[w] & (~Word{0} << (i % kBits));
    while (bits == 0) {
      if (++w == words_.size()) {
        return -1;
      }
      bits = words_[w];
    }
    return static_cast<int>(w) * kBits + std::countr_zero(bits);
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= o.words_[i];
    }
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
    }
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~o.words_[i];
    }
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  /// |this ∩ o| without materializing the intersection.
  int intersect_count(const Bitset& o) const noexcept {
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += std::popcount(words_[i] & o.words_[i]);
    }
    return total;
  }
  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w) * kBits + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  static std::size_t word(int i) noexcept {
    return static_cast<std::size_t>(i / kBits);
  }
  static Word mask(int i) noexcept { return Word{1} << (i % kBits); }
  void trim() noexcept {
    int tail = capacity_ % kBits;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << tail) - 1;
    }
  }

  int capacity_ = 0;
  std::vector<Word> words_;
};

}  // namespace msekr

#endif  // MSEKR_BITSET_HPP
