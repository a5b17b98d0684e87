#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rbasis/int_set.hpp"

namespace rbasis {

/// A rule n -> nonempty finite set of positive integers. Houses both the
/// summand-count sequence H and the target sequence R.
///
/// Immutable; copies share the underlying rule.
class SeqSpec {
 public:
  enum class Kind { constant, interval, table, singleton_index };

  static SeqSpec constant(FiniteSet set);
  /// [lo, hi] for every n; requires 1 <= lo <= hi.
  static SeqSpec interval(Int lo, Int hi);
  /// Explicit entries, with `fallback` for every other n.
  static SeqSpec table(std::map<Int, FiniteSet> entries, SeqSpec fallback);
  /// {1} at n = 0, {n} for n >= 1.
  static SeqSpec singleton_index();
  /// n -> {f(n)}; canonicalised to a table of singletons.
  static SeqSpec exact(const std::map<Int, Int>& values, Int fallback);

  Kind kind() const noexcept;

  FiniteSet eval(Int n) const;
  /// max(eval(n)) without building the set.
  Int max_at(Int n) const;
  /// max over n in [lo, hi] of max_at(n).
  Int max_over(Int lo, Int hi) const;

  nlohmann::json to_json() const;
  /// Throws ConfigError.
  static SeqSpec from_json(const nlohmann::json& j);

  friend bool operator==(const SeqSpec& a, const SeqSpec& b);

  struct Rule;

 private:
  explicit SeqSpec(std::shared_ptr<const Rule> rule) : rule_(std::move(rule)) {}
  std::shared_ptr<const Rule> rule_;
};

/// The (H, R) pair every check and search runs against.
///
/// start_index = 0 is full mode: constraints hold for every n >= 0 and the
/// tree is rooted at {0}. start_index > 0 is asymptotic mode: constraints
/// apply only for n >= start_index and the tree is rooted at `seed`.
struct SpecPair {
  SeqSpec H;
  SeqSpec R;
  Int start_index = 0;
  std::optional<IntSet> seed;

  bool full_mode() const noexcept { return start_index == 0; }
  /// Whether the constraint at index n is enforced.
  bool constrained(Int n) const noexcept { return n >= start_index; }

  nlohmann::json to_json() const;

  friend bool operator==(const SpecPair&, const SpecPair&) = default;
};

/// Parses and validates a configuration document:
///   {"H": rule, "R": rule, "start_index": 0, "seed": [..]}
/// In full mode card(H_0) in R_0 and card(H_1) in R_1 must hold.
/// Throws ConfigError with a diagnostic.
SpecPair parse_spec_pair(std::string_view text);
SpecPair spec_pair_from_json(const nlohmann::json& j);

}  // namespace rbasis
