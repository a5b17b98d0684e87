#include "rbasis/repfn.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rbasis {

namespace {

struct ExactArith {
  using value_type = BigInt;
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
};

struct SaturatingArith {
  using value_type = Int;
  Int cap;
  value_type add(value_type a, value_type b) const { return std::min(cap, a + b); }
};

// table(j, s): nondecreasing j-tuples over the elements added so far with
// sum s, for j in [0, parts], s in [0, window]. Elements must be added in
// increasing order; each pass allows unlimited repeats of the new element.
template <class Arith>
class SumTable {
 public:
  using value_type = typename Arith::value_type;

  SumTable(Int parts, Int window, Arith arith)
      : parts_(parts), width_(window + 1), arith_(arith), cells_((parts + 1) * (window + 1)) {
    at(0, 0) = 1;
  }

  void add_element(Int a) {
    if (a >= width_) return;
    for (Int j = 1; j <= parts_; ++j) {
      value_type* row = &cells_[j * width_];
      const value_type* prev = &cells_[(j - 1) * width_];
      for (Int s = a; s < width_; ++s) row[s] = arith_.add(row[s], prev[s - a]);
    }
  }

  value_type& at(Int j, Int s) { return cells_[j * width_ + s]; }
  const value_type& at(Int j, Int s) const { return cells_[j * width_ + s]; }

  value_type generalized(Int n, const FiniteSet& Hn) const {
    value_type total = 0;
    Hn.for_each([&](Int h) {
      if (h <= parts_) total = arith_.add(total, at(h, n));
    });
    return total;
  }

 private:
  Int parts_;
  Int width_;
  Arith arith_;
  std::vector<value_type> cells_;
};

template <class Arith>
SumTable<Arith> fill(const IntSet& A, Int parts, Int window, Arith arith) {
  SumTable<Arith> t(parts, window, arith);
  for (Int a : A) t.add_element(a);
  return t;
}

using Poly = std::vector<BigInt>;

Poly multiply_truncated(const Poly& x, const Poly& y, std::size_t degree) {
  Poly out(degree + 1);
  for (std::size_t i = 0; i < x.size() && i <= degree; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size() && i + j <= degree; ++j) {
      if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

// Caps above this run with exact arithmetic so saturating sums never wrap.
constexpr Int kMaxMachineCap = Int{1} << 62;

}  // namespace

Count rep_unordered(const IntSet& A, Int n, Int h) {
  return Count(fill(A, h, n, ExactArith{}).at(h, n));
}

Count rep_ordered(const IntSet& A, Int n, Int h) {
  Poly base(n + 1);
  for (Int a : A) {
    if (a <= n) base[a] = 1;
  }
  Poly result(1, BigInt(1));
  while (h > 0) {
    if (h & 1) result = multiply_truncated(result, base, n);
    h >>= 1;
    if (h > 0) base = multiply_truncated(base, base, n);
  }
  return Count(n < result.size() ? result[n] : BigInt(0));
}

Count rep_generalized(const IntSet& A, Int n, const FiniteSet& Hn) {
  return Count(fill(A, Hn.max(), n, ExactArith{}).generalized(n, Hn));
}

CountCap CountCap::uniform(Int cap) {
  if (cap == 0) throw std::invalid_argument("count cap must be positive");
  CountCap c;
  c.mode_ = Mode::uniform;
  c.cap_ = cap;
  return c;
}

CountCap CountCap::per_target(SeqSpec R) {
  CountCap c;
  c.mode_ = Mode::per_target;
  c.targets_ = std::move(R);
  return c;
}

std::optional<Int> CountCap::at(Int n) const {
  switch (mode_) {
    case Mode::none:
      return std::nullopt;
    case Mode::uniform:
      return cap_;
    case Mode::per_target:
      return targets_->max_at(n) + 1;
  }
  return std::nullopt;
}

std::optional<Int> CountCap::max_over(Int lo, Int hi) const {
  switch (mode_) {
    case Mode::none:
      return std::nullopt;
    case Mode::uniform:
      return cap_;
    case Mode::per_target:
      return targets_->max_over(lo, hi) + 1;
  }
  return std::nullopt;
}

RepProfile build_profile(const IntSet& A, const SeqSpec& H, Int window, CountCap cap) {
  RepProfile p{A, H, window, cap, {}};
  p.counts.reserve(window + 1);
  const Int parts = H.max_over(0, window);
  const auto table_cap = cap.max_over(0, window);
  if (table_cap && *table_cap < kMaxMachineCap) {
    auto t = fill(A, parts, window, SaturatingArith{*table_cap});
    for (Int n = 0; n <= window; ++n) p.counts.push_back(Count::clamped(t.generalized(n, H.eval(n)), cap.at(n)));
  } else {
    auto t = fill(A, parts, window, ExactArith{});
    for (Int n = 0; n <= window; ++n) p.counts.push_back(Count::clamped(t.generalized(n, H.eval(n)), cap.at(n)));
  }
  return p;
}

RepProfile extend_profile(const RepProfile& p, Int m, Int new_window) {
  if (!p.set.empty() && m <= p.set.max())
    throw std::invalid_argument("extend_profile: new element " + std::to_string(m) +
                                " must exceed max " + std::to_string(p.set.max()));
  if (new_window < m) throw std::invalid_argument("extend_profile: window must reach the new element");
  RepProfile q = build_profile(p.set.with_max(m), p.H, new_window, p.cap);
  const Int keep = std::min<Int>(m, p.window + 1);
  std::copy_n(p.counts.begin(), keep, q.counts.begin());
  return q;
}

}  // namespace rbasis
