#include "rbasis/int_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbasis {

IntSet::IntSet(std::initializer_list<Int> elems) : IntSet(std::vector<Int>(elems)) {}

IntSet::IntSet(std::vector<Int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::interval(Int lo, Int hi) {
  std::vector<Int> v;
  if (lo <= hi) {
    v.reserve(hi - lo + 1);
    for (Int x = lo;; ++x) {
      v.push_back(x);
      if (x == hi) break;
    }
  }
  return IntSet(std::move(v));
}

Int IntSet::max() const {
  if (elems_.empty()) throw std::logic_error("max() of empty IntSet");
  return elems_.back();
}

Int IntSet::min() const {
  if (elems_.empty()) throw std::logic_error("min() of empty IntSet");
  return elems_.front();
}

bool IntSet::contains(Int x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet IntSet::with_max(Int m) const {
  if (!elems_.empty() && m <= elems_.back())
    throw std::invalid_argument("with_max: " + std::to_string(m) + " is not above max " +
                                std::to_string(elems_.back()));
  IntSet out;
  out.elems_.reserve(elems_.size() + 1);
  out.elems_ = elems_;
  out.elems_.push_back(m);
  return out;
}

IntSet IntSet::without_max() const {
  if (elems_.empty()) throw std::logic_error("without_max() of empty IntSet");
  IntSet out;
  out.elems_.assign(elems_.begin(), elems_.end() - 1);
  return out;
}

IntSet IntSet::truncated(Int a) const {
  IntSet out;
  out.elems_.assign(elems_.begin(), std::upper_bound(elems_.begin(), elems_.end(), a));
  return out;
}

std::string IntSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s + '}';
}

FiniteSet FiniteSet::of(std::vector<Int> elems) {
  if (elems.empty()) throw std::invalid_argument("finite set must be nonempty");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.front() == 0) throw std::invalid_argument("finite set elements must be positive");
  FiniteSet s;
  s.lo_ = elems.front();
  s.hi_ = elems.back();
  if (s.hi_ - s.lo_ + 1 != elems.size()) s.elems_ = std::move(elems);
  return s;
}

FiniteSet FiniteSet::range(Int lo, Int hi) {
  if (lo == 0) throw std::invalid_argument("finite set elements must be positive");
  if (lo > hi) throw std::invalid_argument("range lo > hi");
  FiniteSet s;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

bool FiniteSet::contains(Int x) const noexcept {
  if (x < lo_ || x > hi_) return false;
  return is_range() || std::binary_search(elems_.begin(), elems_.end(), x);
}

std::vector<Int> FiniteSet::elements() const {
  if (!is_range()) return elems_;
  std::vector<Int> v;
  v.reserve(size());
  for_each([&](Int x) { v.push_back(x); });
  return v;
}

std::string FiniteSet::to_string() const {
  if (is_range() && hi_ - lo_ > 2) return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
  std::string s = "{";
  bool first = true;
  for_each([&](Int x) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(x);
  });
  return s + '}';
}

}  // namespace rbasis
