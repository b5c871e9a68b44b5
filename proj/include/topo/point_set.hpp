#pragma once

// PointSet: a subset of a fixed universe of at most 63 points, packed into a
// single 64-bit word. All set algebra is word-at-a-time; membership and
// cardinality are single instructions. Values are immutable: every operation
// returns a new PointSet.
//
// The 63-point cap keeps the full-universe mask representable as
// (1 << n) - 1 without overflow anywhere in the library.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>

#include "topo/error.hpp"

namespace topo {

class PointSet {
 public:
  static constexpr int kMaxUniverse = 63;

  /// Empty set over the empty universe.
  constexpr PointSet() = default;

  /// Empty set over a universe of `universe_size` points.
  explicit PointSet(int universe_size) : n_(check_universe(universe_size)) {}

  PointSet(int universe_size, std::initializer_list<int> members)
      : n_(check_universe(universe_size)) {
    for (int x : members) bits_ |= bit_checked(x);
  }

  static PointSet from_bits(int universe_size, std::uint64_t bits) {
    PointSet s(universe_size);
    if ((bits & ~s.universe_mask()) != 0) {
      throw std::out_of_range("PointSet::from_bits: member outside universe");
    }
    s.bits_ = bits;
    return s;
  }

  static PointSet full(int universe_size) {
    PointSet s(universe_size);
    s.bits_ = s.universe_mask();
    return s;
  }

  static PointSet singleton(int universe_size, int x) {
    return PointSet(universe_size, {x});
  }

  int universe_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int x) const { return x >= 0 && x < n_ && ((bits_ >> x) & 1u) != 0; }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  bool is_singleton() const { return std::has_single_bit(bits_); }

  /// Least member; the set must be nonempty.
  int least() const {
    if (empty()) throw std::out_of_range("PointSet::least on empty set");
    return std::countr_zero(bits_);
  }

  PointSet with(int x) const {
    PointSet s = *this;
    s.bits_ |= bit_checked(x);
    return s;
  }

  PointSet without(int x) const {
    PointSet s = *this;
    s.bits_ &= ~bit_checked(x);
    return s;
  }

  PointSet complement() const {
    PointSet s(n_);
    s.bits_ = ~bits_ & universe_mask();
    return s;
  }

  bool subset_of(const PointSet& other) const {
    check_same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }

  bool intersects(const PointSet& other) const {
    check_same_universe(other);
    return (bits_ & other.bits_) != 0;
  }

  friend PointSet operator|(const PointSet& a, const PointSet& b) {
    a.check_same_universe(b);
    PointSet s(a.n_);
    s.bits_ = a.bits_ | b.bits_;
    return s;
  }

  friend PointSet operator&(const PointSet& a, const PointSet& b) {
    a.check_same_universe(b);
    PointSet s(a.n_);
    s.bits_ = a.bits_ & b.bits_;
    return s;
  }

  /// Set difference a \ b.
  friend PointSet operator-(const PointSet& a, const PointSet& b) {
    a.check_same_universe(b);
    PointSet s(a.n_);
    s.bits_ = a.bits_ & ~b.bits_;
    return s;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

  /// Total order by (universe size, bits); for use as a container key.
  friend bool operator<(const PointSet& a, const PointSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

  // Iterates members in ascending order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;  // clear lowest set bit
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.rest_ == b.rest_; }
    friend bool operator!=(const iterator& a, const iterator& b) { return a.rest_ != b.rest_; }

   private:
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  /// "1 3 5" for {1,3,5}; "{}" for the empty set.
  std::string to_string() const {
    if (empty()) return "{}";
    std::string out;
    for (int x : *this) {
      if (!out.empty()) out += ' ';
      out += std::to_string(x);
    }
    return out;
  }

 private:
  static int check_universe(int n) {
    if (n < 0 || n > kMaxUniverse) {
      throw CapacityExceeded("PointSet universe size " + std::to_string(n) +
                             " outside [0, " + std::to_string(kMaxUniverse) + "]");
    }
    return n;
  }

  std::uint64_t universe_mask() const {
    return n_ == 0 ? 0 : (std::uint64_t{1} << n_) - 1;
  }

  std::uint64_t bit_checked(int x) const {
    if (x < 0 || x >= n_) {
      throw std::out_of_range("PointSet: point " + std::to_string(x) +
                              " outside universe of size " + std::to_string(n_));
    }
    return std::uint64_t{1} << x;
  }

  void check_same_universe(const PointSet& other) const {
    if (n_ != other.n_) {
      throw UniverseMismatch("PointSet universes differ: " + std::to_string(n_) + " vs " +
                             std::to_string(other.n_));
    }
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

}  // namespace topo
