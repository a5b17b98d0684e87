#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "rbasis/count.hpp"
#include "rbasis/int_set.hpp"
#include "rbasis/seqspec.hpp"

namespace rbasis {

struct Violation {
  enum class Kind {
    below_one,     // r(n, H_n) = 0
    not_in_R,      // r(n, H_n) outside R_n
    necessity,     // n > max(H_n) * max(A); got holds the product
    precondition,  // max(H_n) < ceil(n / m); got holds max(H_n)
  };

  Int n = 0;
  Count got;
  std::optional<FiniteSet> expected;
  Kind kind = Kind::below_one;
};

const char* to_string(Violation::Kind kind) noexcept;

struct CheckReport {
  bool ok = true;
  std::vector<Violation> violations;  // empty iff ok (up to the limit)
  Int window_lo = 0;
  Int window_hi = 0;
  /// Violations past the limit were dropped.
  bool truncated = false;

  /// {"ok":..,"window":[lo,hi],"violations":[{"n":..,"got":..,"kind":..}]}
  nlohmann::ordered_json to_json() const;
};

struct CheckOptions {
  std::size_t violation_limit = 32;
};

/// r(n, H_n) >= 1 for n in [start_index, max(A)].
CheckReport is_finite_basis(const IntSet& A, const SeqSpec& H, Int start_index = 0, CheckOptions opts = {});

/// r(n, H_n) in R_n for n in [start_index, max(A)].
CheckReport is_finite_R_basis(const IntSet& A, const SpecPair& pair, CheckOptions opts = {});

/// r(n, H_n) in R_n for n in [start_index, W]; W may exceed max(A).
CheckReport check_window(const IntSet& A, const SpecPair& pair, Int W, CheckOptions opts = {});

/// The arithmetic consequence of basishood: every n in [1, W] is a sum of at
/// most max(H_n) elements, so n <= max(H_n) * max(A). W defaults to max(A).
CheckReport check_reach_necessity(const IntSet& A, const SeqSpec& H, std::optional<Int> W = std::nullopt,
                                  CheckOptions opts = {});

/// Division-algorithm witness n = q*m + r + zeros in [0, m], using h = max(H_n)
/// summands.
struct IntervalRepresentation {
  Int n = 0;
  Int h = 0;
  Int q = 0;  // copies of m
  Int r = 0;  // one extra summand when nonzero

  /// The h-tuple, nondecreasing.
  std::vector<Int> parts(Int m) const;
};

struct IntervalConstruction {
  CheckReport report;
  std::vector<IntervalRepresentation> witnesses;  // one per n when report.ok
};

/// Shows constructively that [0, m] is a basis of order H on [0, W]. Needs
/// max(H_n) >= ceil(n / m) for every n in [1, W]; failures are reported as
/// precondition violations. Each witness is also checked against the
/// counting DP.
IntervalConstruction interval_basis_construction(Int m, const SeqSpec& H, Int W, CheckOptions opts = {});

/// card(H_0) in R_0 and card(H_1) in R_1.
CheckReport necessary_conditions(const SpecPair& pair);

}  // namespace rbasis
