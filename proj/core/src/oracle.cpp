#include "rbasis/oracle.hpp"

#include <algorithm>
#include <string>

#include "rbasis/errors.hpp"

namespace rbasis::oracle {

namespace {

void guard(const IntSet& A, Int h) {
  std::uint64_t total = 1;
  for (Int i = 0; i < h; ++i) {
    total *= std::max<std::uint64_t>(A.size(), 1);
    if (total > kTupleGuard)
      throw GuardExceeded("oracle: card(A)^h = " + std::to_string(A.size()) + "^" + std::to_string(h) +
                          " exceeds the enumeration guard");
  }
}

}  // namespace

void for_each_nondecreasing_tuple(const IntSet& A, Int h, const std::function<void(std::span<const Int>)>& fn) {
  guard(A, h);
  if (A.empty()) {
    if (h == 0) fn({});
    return;
  }
  const auto elems = A.elements();
  std::vector<std::size_t> idx(h, 0);
  std::vector<Int> tuple(h, elems[0]);
  for (;;) {
    for (Int i = 0; i < h; ++i) tuple[i] = elems[idx[i]];
    fn(tuple);
    // Next nondecreasing index sequence.
    std::size_t pos = h;
    while (pos > 0 && idx[pos - 1] == elems.size() - 1) --pos;
    if (pos == 0) return;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < h; ++i) idx[i] = next;
  }
}

Count rep_unordered_naive(const IntSet& A, Int n, Int h) {
  BigInt count = 0;
  for_each_nondecreasing_tuple(A, h, [&](std::span<const Int> t) {
    BigInt sum = 0;
    for (Int x : t) sum += x;
    if (sum == n) ++count;
  });
  return Count(count);
}

Count rep_ordered_naive(const IntSet& A, Int n, Int h) {
  guard(A, h);
  if (A.empty()) return Count(Int{h == 0 && n == 0 ? 1u : 0u});
  const auto elems = A.elements();
  std::vector<std::size_t> idx(h, 0);
  BigInt count = 0;
  for (;;) {
    BigInt sum = 0;
    for (std::size_t i : idx) sum += elems[i];
    if (sum == n) ++count;
    std::size_t pos = 0;
    while (pos < h && idx[pos] == elems.size() - 1) idx[pos++] = 0;
    if (pos == h) break;
    ++idx[pos];
  }
  return Count(count);
}

std::vector<IntSet> all_R_bases_naive(const SpecPair& pair, Int M) {
  if (M > kMaxSubsetBound)
    throw GuardExceeded("oracle: subset sweep bound " + std::to_string(M) + " exceeds " +
                        std::to_string(kMaxSubsetBound));
  const IntSet root = pair.full_mode() ? IntSet{0} : pair.seed.value_or(IntSet{});
  if (root.empty() || root.max() > M) return {};

  const Int free_lo = root.max() + 1;
  const Int free_count = M + 1 - free_lo;
  std::vector<IntSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_count); ++mask) {
    std::vector<Int> elems(root.begin(), root.end());
    for (Int b = 0; b < free_count; ++b) {
      if (mask >> b & 1) elems.push_back(free_lo + b);
    }
    IntSet A(std::move(elems));
    bool ok = true;
    for (Int n = pair.start_index; ok && n <= A.max(); ++n) {
      BigInt r = 0;
      pair.H.eval(n).for_each([&](Int h) { r += rep_unordered_naive(A, n, h).value(); });
      const FiniteSet target = pair.R.eval(n);
      ok = r <= target.max() && target.contains(r.convert_to<Int>());
    }
    if (ok) out.push_back(std::move(A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rbasis::oracle
