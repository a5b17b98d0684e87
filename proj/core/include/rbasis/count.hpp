#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbasis/int_set.hpp"

namespace rbasis {

using BigInt = boost::multiprecision::cpp_int;

/// A representation count. Either exact, or saturated: the true value is at
/// least value(). A saturated count compares correctly against any target set
/// whose maximum is below value().
class Count {
 public:
  Count() = default;
  Count(BigInt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Count(Int v) : value_(v) {}                // NOLINT(google-explicit-constructor)

  static Count at_least(BigInt cap) {
    Count c(std::move(cap));
    c.saturated_ = true;
    return c;
  }

  /// Saturates at cap when the value reaches it.
  static Count clamped(BigInt v, std::optional<Int> cap) {
    if (cap && v >= *cap) return at_least(BigInt(*cap));
    return Count(std::move(v));
  }

  const BigInt& value() const noexcept { return value_; }
  bool saturated() const noexcept { return saturated_; }
  bool is_zero() const noexcept { return !saturated_ && value_ == 0; }

  /// Membership in a target set. Throws std::logic_error if the count is
  /// saturated below the set's maximum, where the answer is unknown.
  bool in(const FiniteSet& target) const;

  /// "12" or "12+" for a saturated count.
  std::string to_string() const;

  friend bool operator==(const Count&, const Count&) = default;

 private:
  BigInt value_ = 0;
  bool saturated_ = false;
};

}  // namespace rbasis
