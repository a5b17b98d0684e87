#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "rbasis/int_set.hpp"
#include "rbasis/repfn.hpp"
#include "rbasis/seqspec.hpp"

namespace rbasis {

/// A finite R-basis together with its profile on [0, max(set)], counts
/// saturated at max(R_n) + 1.
struct Vertex {
  IntSet set;
  RepProfile profile;

  Int max() const { return set.max(); }
  /// {"set":[...]}
  nlohmann::json to_json() const;
};

/// Every child V ∪ {m} of a vertex V has m <= bound.
struct CandidateBound {
  Int vertex_max = 0;
  Int bound = 0;
  /// False when the scan hit the hard cap before the admissibility test
  /// m - 1 <= max(H_{m-1}) * max(V) failed for a full stretch.
  bool finite = true;
};

struct TreeOptions {
  /// The bound scan stops after stretch_factor * max(1, max(V)) consecutive
  /// inadmissible m.
  Int stretch_factor = 64;
  /// Maximum number of m examined by one bound scan.
  Int hard_cap = Int{1} << 24;

  friend bool operator==(const TreeOptions&, const TreeOptions&) = default;
};

/// The tree whose vertices are the finite R-bases of a pair, with V adjacent
/// to V minus its maximum. Rooted at {0} in full mode and at the seed set in
/// asymptotic mode.
class BasisTree {
 public:
  explicit BasisTree(SpecPair pair, TreeOptions opts = {});

  const SpecPair& pair() const noexcept { return pair_; }
  const TreeOptions& options() const noexcept { return opts_; }

  /// Throws ConfigError if {0} (or the seed) is not a finite R-basis.
  Vertex root() const;
  bool is_root(const Vertex& v) const { return v.set == root_set(); }
  const IntSet& root_set() const noexcept { return root_set_; }

  /// V minus its maximum, with a truncated profile. Throws std::logic_error
  /// on the root.
  Vertex parent(const Vertex& v) const;

  CandidateBound candidate_bound(const Vertex& v) const;
  /// As candidate_bound, but never scans past `limit`; always finite.
  CandidateBound candidate_bound(const Vertex& v, Int limit) const;

  /// All children in increasing order of the new maximum. One counting sweep
  /// over (max(V), B] serves every candidate. Throws BoundScanError if the
  /// bound scan is not finite.
  std::vector<Vertex> children(const Vertex& v) const;
  /// Children whose new maximum is at most max_element.
  std::vector<Vertex> children(const Vertex& v, Int max_element) const;

  /// Rebuilds the profile of a set and checks it is a vertex of this tree.
  /// Throws ConfigError otherwise.
  Vertex load(const IntSet& set) const;
  Vertex load(const nlohmann::json& j) const;

  static bool is_adjacent(const IntSet& a, const IntSet& b);
  static bool is_adjacent(const Vertex& a, const Vertex& b) { return is_adjacent(a.set, b.set); }

 private:
  CandidateBound scan(const Vertex& v, std::optional<Int> limit) const;
  std::vector<Vertex> expand(const Vertex& v, Int bound) const;

  SpecPair pair_;
  TreeOptions opts_;
  IntSet root_set_;
};

}  // namespace rbasis
