#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rbasis/count.hpp"
#include "rbasis/int_set.hpp"
#include "rbasis/seqspec.hpp"

// Brute-force reference implementations. Slow on purpose and independent of
// the counting DP; used by the test suites and the CLI's --oracle flag.
namespace rbasis::oracle {

/// card(A)^h may not exceed this.
inline constexpr std::uint64_t kTupleGuard = 10'000'000;
/// all_R_bases_naive sweeps 2^M subsets.
inline constexpr Int kMaxSubsetBound = 24;

/// Visits every nondecreasing h-tuple over A (as values). Throws GuardExceeded.
void for_each_nondecreasing_tuple(const IntSet& A, Int h, const std::function<void(std::span<const Int>)>& fn);

Count rep_unordered_naive(const IntSet& A, Int n, Int h);
Count rep_ordered_naive(const IntSet& A, Int n, Int h);

/// Every subset of [0, M] containing the root ({0}, or the seed in
/// asymptotic mode) that is a finite R-basis, counted with
/// rep_unordered_naive. Sorted lexicographically.
std::vector<IntSet> all_R_bases_naive(const SpecPair& pair, Int M);

}  // namespace rbasis::oracle
