#include "sumess/bitset.hpp"

#include <cassert>

namespace sumess {

void BitSet::set_all() {
  for (auto& w : words_) w = ~Word{0};
  const std::size_t tail = nbits_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

void BitSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::any() const {
  for (Word w : words_)
    if (w != 0) return true;
  return false;
}

bool BitSet::is_subset_of(const BitSet& other) const {
  assert(nbits_ == other.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  assert(nbits_ == other.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  assert(nbits_ == other.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  assert(nbits_ == other.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::subtract(const BitSet& other) {
  assert(nbits_ == other.nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool BitSet::member_lex_less(const BitSet& a, const BitSet& b) {
  assert(a.nbits_ == b.nbits_);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const Word diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::size_t bit = w * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    // The member lists agree below `bit`. The side holding `bit` is smaller
    // unless the other side has no members left at all (it is then a prefix).
    if (a.test(bit)) return b.next(bit) < b.nbits_;
    return a.next(bit) >= a.nbits_;
  }
  return false;
}

std::size_t BitSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return nbits_;
}

std::size_t BitSet::next(std::size_t i) const {
  std::size_t start = i + 1;
  if (start >= nbits_) return nbits_;
  std::size_t w = start / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return nbits_;
    bits = words_[w];
  }
}

std::vector<std::size_t> BitSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t BitSet::hash() const {
  // FNV-1a over words.
  std::size_t h = 1469598103934665603ULL ^ nbits_;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sumess
