#pragma once

#include <optional>
#include <vector>

#include "rbasis/count.hpp"
#include "rbasis/int_set.hpp"
#include "rbasis/seqspec.hpp"

namespace rbasis {

/// Number of nondecreasing h-tuples a_1 <= ... <= a_h from A with sum n.
/// Exact. O(card(A) * h * n).
Count rep_unordered(const IntSet& A, Int n, Int h);

/// Number of ordered h-tuples in A^h with sum n: the coefficient of x^n in
/// (sum_{a in A} x^a)^h, by exact exponentiation by squaring.
Count rep_ordered(const IntSet& A, Int n, Int h);

/// sum over h in Hn of rep_unordered(A, n, h).
Count rep_generalized(const IntSet& A, Int n, const FiniteSet& Hn);

/// Saturation policy for profile counts.
class CountCap {
 public:
  static CountCap none() { return CountCap(); }
  static CountCap uniform(Int cap);
  /// cap_n = max(R_n) + 1: exactly enough to decide membership in R_n.
  static CountCap per_target(SeqSpec R);

  /// Cap at index n, or nullopt for exact counting.
  std::optional<Int> at(Int n) const;
  /// Largest cap over [lo, hi].
  std::optional<Int> max_over(Int lo, Int hi) const;

  friend bool operator==(const CountCap&, const CountCap&) = default;

 private:
  CountCap() = default;
  enum class Mode { none, uniform, per_target } mode_ = Mode::none;
  Int cap_ = 0;
  std::optional<SeqSpec> targets_;
};

/// counts[n] = r_A(n, H_n) for n in [0, window].
struct RepProfile {
  IntSet set;
  SeqSpec H;
  Int window = 0;
  CountCap cap = CountCap::none();
  std::vector<Count> counts;
};

RepProfile build_profile(const IntSet& A, const SeqSpec& H, Int window, CountCap cap = CountCap::none());

/// Profile of A ∪ {m} on [0, new_window]. Entries below m that `p` already
/// holds are carried over unchanged (a sum using m is at least m); the rest
/// are recomputed. Requires m > max(p.set) and new_window >= m.
RepProfile extend_profile(const RepProfile& p, Int m, Int new_window);

}  // namespace rbasis
