#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace orderlink {

using VertexId = std::uint32_t;

/// Sentinel returned by the search helpers when no vertex qualifies.
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// A subset of the vertex universe [0, n) stored as packed 64-bit words.
///
/// All binary operations require both operands to share the same universe.
/// Padding bits past the universe are kept at zero so that counts and
/// searches never report phantom vertices.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const VertexSet* set, VertexId at) : set_(set), at_(at) {}

    VertexId operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return at_ == o.at_; }

   private:
    const VertexSet* set_ = nullptr;
    VertexId at_ = kNoVertex;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) set(v);
  }
  VertexSet(std::size_t universe, std::span<const VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) set(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(VertexId v) const {
    assert(v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(VertexId v) {
    assert(v < universe_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void reset(VertexId v) {
    assert(v < universe_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or kNoVertex.
  VertexId first() const { return scan_from(0); }
  /// Smallest member strictly greater than `v`, or kNoVertex.
  VertexId next(VertexId v) const {
    if (v == kNoVertex || static_cast<std::size_t>(v) + 1 >= universe_) return kNoVertex;
    return scan_from(v + 1);
  }

  bool intersects(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  /// Smallest vertex in this ∩ o, or kNoVertex.
  VertexId first_common(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (Word w = words_[i] & o.words_[i]) return word_base(i) + std::countr_zero(w);
    return kNoVertex;
  }
  /// Smallest vertex in this ∩ o that is not in `excluded`, or kNoVertex.
  VertexId first_common_excluding(const VertexSet& o, const VertexSet& excluded) const {
    assert(o.universe_ == universe_ && excluded.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (Word w = words_[i] & o.words_[i] & ~excluded.words_[i])
        return word_base(i) + std::countr_zero(w);
    return kNoVertex;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool operator==(const VertexSet& o) const = default;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, kNoVertex}; }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for (VertexId v : *this) out.push_back(v);
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

 private:
  static VertexId word_base(std::size_t i) { return static_cast<VertexId>(i * kWordBits); }

  VertexId scan_from(std::size_t from) const {
    std::size_t i = from / kWordBits;
    if (i >= words_.size()) return kNoVertex;
    Word w = words_[i] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return word_base(i) + std::countr_zero(w);
      if (++i == words_.size()) return kNoVertex;
      w = words_[i];
    }
  }

  void trim() {
    if (std::size_t r = universe_ % kWordBits; r != 0 && !words_.empty())
      words_.back() &= (Word{1} << r) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace orderlink
