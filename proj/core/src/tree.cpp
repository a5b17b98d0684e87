#include "rbasis/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "rbasis/basis.hpp"
#include "rbasis/errors.hpp"

namespace rbasis {

nlohmann::json Vertex::to_json() const {
  return {{"set", std::vector<Int>(set.begin(), set.end())}};
}

BasisTree::BasisTree(SpecPair pair, TreeOptions opts)
    : pair_(std::move(pair)), opts_(opts), root_set_(pair_.full_mode() ? IntSet{0} : pair_.seed.value_or(IntSet{})) {
  if (root_set_.empty()) throw ConfigError("asymptotic mode needs a nonempty seed set");
  if (opts_.hard_cap == 0) throw std::invalid_argument("hard_cap must be positive");
}

Vertex BasisTree::root() const { return load(root_set_); }

Vertex BasisTree::load(const IntSet& set) const {
  if (set.empty()) throw ConfigError("vertex set must be nonempty");
  if (set.truncated(root_set_.max()) != root_set_)
    throw ConfigError("set " + set.to_string() + " does not extend the root " + root_set_.to_string());
  const CheckReport report = is_finite_R_basis(set, pair_, {.violation_limit = 1});
  if (!report.ok) {
    const Violation& v = report.violations.front();
    throw ConfigError("set " + set.to_string() + " is not a finite R-basis: r(" + std::to_string(v.n) +
                      ", H) = " + v.got.to_string() + " not in R_" + std::to_string(v.n));
  }
  return Vertex{set, build_profile(set, pair_.H, set.max(), CountCap::per_target(pair_.R))};
}

Vertex BasisTree::load(const nlohmann::json& j) const {
  if (!j.is_object() || !j.contains("set") || !j["set"].is_array()) throw ConfigError("vertex must be {\"set\":[...]}");
  std::vector<Int> elems;
  for (const auto& e : j["set"]) {
    if (!e.is_number_unsigned()) throw ConfigError("vertex elements must be nonnegative integers");
    elems.push_back(e.get<Int>());
  }
  return load(IntSet(std::move(elems)));
}

Vertex BasisTree::parent(const Vertex& v) const {
  if (is_root(v) || v.set.size() <= 1) throw std::logic_error("parent() called on the root " + v.set.to_string());
  IntSet up = v.set.without_max();
  RepProfile p = v.profile;
  p.set = up;
  p.window = up.max();
  p.counts.resize(up.max() + 1);
  return Vertex{std::move(up), std::move(p)};
}

CandidateBound BasisTree::candidate_bound(const Vertex& v) const { return scan(v, std::nullopt); }

CandidateBound BasisTree::candidate_bound(const Vertex& v, Int limit) const { return scan(v, limit); }

CandidateBound BasisTree::scan(const Vertex& v, std::optional<Int> limit) const {
  const Int top = v.max();
  const Int stretch = std::max<Int>(top, 1) * opts_.stretch_factor;
  CandidateBound out{top, top, true};
  Int misses = 0;
  for (Int m = top + 1, scanned = 0;; ++m, ++scanned) {
    if (limit && m > *limit) return out;
    if (scanned >= opts_.hard_cap) {
      out.finite = false;
      return out;
    }
    // A child with maximum m must represent n = m - 1 using V alone.
    const Int n = m - 1;
    bool admissible = !pair_.constrained(n);
    if (!admissible) {
      // n <= max(H_n) * top, without overflow.
      admissible = n == 0 || (top > 0 && (n - 1) / top + 1 <= pair_.H.max_at(n));
    }
    if (admissible) {
      out.bound = m;
      misses = 0;
    } else if (++misses >= stretch) {
      return out;
    }
  }
}

std::vector<Vertex> BasisTree::children(const Vertex& v) const {
  const CandidateBound b = candidate_bound(v);
  if (!b.finite)
    throw BoundScanError("bound scan from " + v.set.to_string() + " reached the hard cap of " +
                         std::to_string(opts_.hard_cap) +
                         " candidates without the branching bound closing; the pair appears to violate "
                         "lim max(H_n)/n = 0, so the tree need not be locally finite");
  return expand(v, b.bound);
}

std::vector<Vertex> BasisTree::children(const Vertex& v, Int max_element) const {
  return expand(v, candidate_bound(v, max_element).bound);
}

std::vector<Vertex> BasisTree::expand(const Vertex& v, Int bound) const {
  const Int top = v.max();
  std::vector<Vertex> out;
  if (bound <= top) return out;

  const CountCap cap = CountCap::per_target(pair_.R);
  const RepProfile sweep = build_profile(v.set, pair_.H, bound, cap);
  const bool has_zero = v.set.contains(0);

  for (Int m = top + 1; m <= bound; ++m) {
    const FiniteSet target = pair_.R.eval(m);
    // Tuples containing m with sum m: m itself plus zeros.
    Int extra = 0;
    pair_.H.eval(m).for_each([&](Int h) { extra += (h == 1 || has_zero) ? 1 : 0; });
    const Count& base = sweep.counts[m];
    const Count last = base.saturated() ? base : Count::clamped(base.value() + extra, cap.at(m));

    if (!pair_.constrained(m) || last.in(target)) {
      IntSet set = v.set.with_max(m);
      RepProfile p{set, pair_.H, m, cap, {}};
      p.counts.reserve(m + 1);
      p.counts.insert(p.counts.end(), v.profile.counts.begin(), v.profile.counts.end());
      p.counts.insert(p.counts.end(), sweep.counts.begin() + static_cast<std::ptrdiff_t>(top + 1),
                      sweep.counts.begin() + static_cast<std::ptrdiff_t>(m));
      p.counts.push_back(last);
      out.push_back(Vertex{std::move(set), std::move(p)});
    }
    // Larger m keep r(m, H_m) from V alone.
    if (pair_.constrained(m) && !base.in(target)) break;
  }
  return out;
}

bool BasisTree::is_adjacent(const IntSet& a, const IntSet& b) {
  const IntSet& small = a.size() < b.size() ? a : b;
  const IntSet& large = a.size() < b.size() ? b : a;
  if (large.size() != small.size() + 1) return false;
  return large.without_max() == small;
}

}  // namespace rbasis
