#pragma once

#include <random>
#include <vector>

#include "rbasis/int_set.hpp"
#include "rbasis/seqspec.hpp"

namespace rbasis::testing {

/// H_n = {h}, R_n = [lo, hi].
inline SpecPair dowd_pair(Int h, Int lo, Int hi) {
  return SpecPair{SeqSpec::constant(FiniteSet::single(h)), SeqSpec::interval(lo, hi), 0, std::nullopt};
}

inline SpecPair constant_pair(Int h, std::vector<Int> targets) {
  return SpecPair{SeqSpec::constant(FiniteSet::single(h)), SeqSpec::constant(FiniteSet::of(std::move(targets))), 0,
                  std::nullopt};
}

/// H_0 = R_0 = {1}, H_n = {n}, R_n = {1, 2}.
inline SpecPair singleton_pair() {
  return SpecPair{SeqSpec::singleton_index(),
                  SeqSpec::table({{0, FiniteSet::single(1)}}, SeqSpec::constant(FiniteSet::of({1, 2}))), 0,
                  std::nullopt};
}

/// Random subset of [0, hi] with at most max_card elements (possibly empty).
inline IntSet random_set(std::mt19937_64& rng, Int hi, std::size_t max_card) {
  std::uniform_int_distribution<std::size_t> card(0, max_card);
  std::uniform_int_distribution<Int> elem(0, hi);
  std::vector<Int> v;
  const std::size_t k = card(rng);
  for (std::size_t i = 0; i < k; ++i) v.push_back(elem(rng));
  return IntSet(std::move(v));
}

/// Every subset of [0, hi] with at most max_card elements.
inline std::vector<IntSet> all_small_sets(Int hi, std::size_t max_card) {
  std::vector<IntSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (hi + 1)); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_card) continue;
    std::vector<Int> v;
    for (Int b = 0; b <= hi; ++b) {
      if (mask >> b & 1) v.push_back(b);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace rbasis::testing
