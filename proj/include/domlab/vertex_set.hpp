#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "domlab/errors.hpp"

namespace domlab {

// Subset of {0, ..., capacity()-1} backed by 64-bit words. Bits at or above
// capacity stay zero, so whole-word operations need no trailing special case.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int capacity)
      : capacity_(capacity), words_(word_count(capacity), 0) {}

  static VertexSet of(int capacity, std::initializer_list<int> ids) {
    VertexSet s(capacity);
    for (int v : ids) s.add(v);
    return s;
  }

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    return s;
  }

  int capacity() const { return capacity_; }

  bool contains(int v) const {
    if (v < 0 || v >= capacity_) return false;
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void add(int v) {
    check_range(v);
    words_[static_cast<size_t>(v) >> 6] |= 1ull << (v & 63);
  }

  void remove(int v) {
    check_range(v);
    words_[static_cast<size_t>(v) >> 6] &= ~(1ull << (v & 63));
  }

  void set(int v, bool on) { on ? add(v) : remove(v); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Removes every member of o.
  VertexSet& subtract(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  // Smallest member, or -1.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }

  // Smallest member strictly greater than v, or -1. v may be -1.
  int next(int v) const {
    int from = v + 1;
    if (from >= capacity_) return -1;
    size_t wi = static_cast<size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~0ull << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  // Smallest non-member in [0, capacity), or -1 when the set is full.
  int first_absent() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = ~words_[i];
      if (i + 1 == words_.size() && capacity_ % 64 != 0) {
        w &= (1ull << (capacity_ % 64)) - 1;
      }
      if (w) {
        int v = static_cast<int>(i * 64) + std::countr_zero(w);
        return v < capacity_ ? v : -1;
      }
    }
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& o) const = default;

  // Order on sorted id sequences: the smallest id where the sets differ
  // decides, and it favours the set that contains it.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.check_same(b);
    for (size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) return (a.words_[i] >> std::countr_zero(d)) & 1u;
    }
    return false;
  }

 private:
  static size_t word_count(int capacity) {
    if (capacity < 0) throw ContractError("vertex set capacity must be non-negative");
    return (static_cast<size_t>(capacity) + 63) / 64;
  }

  void check_range(int v) const {
    if (v < 0 || v >= capacity_) {
      throw ContractError("vertex id " + std::to_string(v) + " outside capacity " +
                          std::to_string(capacity_));
    }
  }

  void check_same(const VertexSet& o) const {
    if (capacity_ != o.capacity_) {
      throw ContractError("vertex set capacities differ: " + std::to_string(capacity_) +
                          " vs " + std::to_string(o.capacity_));
    }
  }

  void trim() {
    if (capacity_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (1ull << (capacity_ % 64)) - 1;
    }
  }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domlab
