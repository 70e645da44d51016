#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sumess {

/// Fixed-length dense bit vector. Used for submodule member sets, graph
/// adjacency rows and annihilator sets; all binary operations require equal
/// lengths.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool all() const { return count() == nbits_; }

  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  /// Set difference in place.
  BitSet& subtract(const BitSet& other);

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) = default;

  /// Lexicographic comparison of the sorted member lists.
  static bool member_lex_less(const BitSet& a, const BitSet& b);

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  /// Index of the next set bit strictly after i, or size().
  std::size_t next(std::size_t i) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const;

  std::size_t hash() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

}  // namespace sumess
