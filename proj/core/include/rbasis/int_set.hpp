#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rbasis {

using Int = std::uint64_t;

/// Finite set of nonnegative integers kept as a strictly increasing array.
/// Candidate bases and tree vertices are IntSets.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<Int> elems);
  /// Sorts and removes duplicates.
  explicit IntSet(std::vector<Int> elems);

  /// [lo, hi]
  static IntSet interval(Int lo, Int hi);

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  /// Throws std::logic_error on the empty set.
  Int max() const;
  Int min() const;
  bool contains(Int x) const noexcept;

  std::span<const Int> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  Int operator[](std::size_t i) const noexcept { return elems_[i]; }

  /// This set plus a new maximum m; requires m > max().
  IntSet with_max(Int m) const;
  /// This set minus its maximum.
  IntSet without_max() const;
  /// Intersection with [0, a].
  IntSet truncated(Int a) const;

  std::string to_string() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic on the increasing element sequence.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<Int> elems_;
};

/// Nonempty finite set of positive integers: one H_n or R_n.
/// Contiguous sets are stored as a range so membership is O(1).
class FiniteSet {
 public:
  /// Throws std::invalid_argument if empty or if any element is 0.
  static FiniteSet of(std::vector<Int> elems);
  static FiniteSet range(Int lo, Int hi);
  static FiniteSet single(Int x) { return range(x, x); }

  bool contains(Int x) const noexcept;
  Int min() const noexcept { return lo_; }
  Int max() const noexcept { return hi_; }
  /// Cardinality.
  Int size() const noexcept { return is_range() ? hi_ - lo_ + 1 : elems_.size(); }
  bool is_range() const noexcept { return elems_.empty(); }
  std::vector<Int> elements() const;

  template <class F>
  void for_each(F&& f) const {
    if (is_range()) {
      for (Int x = lo_;; ++x) {
        f(x);
        if (x == hi_) break;
      }
    } else {
      for (Int x : elems_) f(x);
    }
  }

  std::string to_string() const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  FiniteSet() = default;
  Int lo_ = 1;
  Int hi_ = 1;
  std::vector<Int> elems_;  // empty iff the set is [lo_, hi_]
};

}  // namespace rbasis
