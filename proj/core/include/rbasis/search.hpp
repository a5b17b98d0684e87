#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rbasis/int_set.hpp"
#include "rbasis/seqspec.hpp"
#include "rbasis/tree.hpp"

namespace rbasis {

enum class Strategy { dfs_smallest_first, dfs_largest_first, bfs, iterative_deepening };

const char* to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

struct SearchConfig {
  SpecPair pair;
  /// Stop at the first vertex with max >= target.
  Int target = 0;
  Strategy strategy = Strategy::dfs_smallest_first;
  /// Maximum number of expansions (children computations).
  std::uint64_t budget = 1'000'000;
  /// Emit a checkpoint every this many expansions; 0 disables.
  std::uint64_t checkpoint_every = 0;
  /// Number of vertices expanded ahead on worker threads; 0 is sequential.
  unsigned parallel = 0;
  TreeOptions tree;
};

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t visited = 0;
  std::size_t max_depth = 0;  // largest cardinality seen
  Int deepest_max = 0;
  IntSet deepest;  // lexicographically least visited set with max = deepest_max

  void record(const IntSet& s);

  nlohmann::ordered_json to_json() const;
  static SearchStats from_json(const nlohmann::json& j);

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Resumable search state: everything needed to continue a run, taken
/// between two vertex visits.
struct Checkpoint {
  static constexpr int kVersion = 1;

  std::string digest;
  Strategy strategy = Strategy::dfs_smallest_first;
  std::vector<IntSet> frontier;  // container order; pops come from the end for DFS, the front for BFS
  SearchStats stats;
  std::size_t depth_limit = 0;  // iterative deepening only
  bool cutoff = false;          // iterative deepening only

  nlohmann::ordered_json to_json() const;
  /// Throws ConfigError on malformed or wrong-version input.
  static Checkpoint from_json(const nlohmann::json& j);
};

struct SearchOutcome {
  enum class Kind { found, exhausted, budget_exceeded };

  Kind kind = Kind::exhausted;
  std::optional<IntSet> witness;
  SearchStats stats;
  /// True when the tree was rooted at a user seed rather than {0}.
  bool asymptotic = false;
  /// State to resume from. For found/budget outcomes the vertex being
  /// visited is put back, so resuming replays the same outcome.
  Checkpoint checkpoint;
  /// Filled in by callers that wrote the checkpoint to disk.
  std::optional<std::string> checkpoint_path;

  /// {"kind":"found|exhausted|budget","mode":..,"witness":[..]|null,"stats":{..},"checkpoint_path":..}
  nlohmann::ordered_json to_json() const;
};

const char* to_string(SearchOutcome::Kind k) noexcept;

struct SearchHooks {
  /// After each expansion, with the children generated.
  std::function<void(const Vertex&, std::span<const Vertex>)> on_expand;
  std::function<void(const SearchStats&)> on_progress;
  /// Every checkpoint_every expansions.
  std::function<void(const Checkpoint&)> on_checkpoint;
};

/// SHA-256 (hex) over the parts of a config that determine the outcome: the
/// pair, target, strategy and bound-scan options.
std::string config_digest(const SearchConfig& config);

/// Searches the tree of finite R-bases for one with max >= target.
/// Throws ConfigError if the necessary conditions fail (full mode) and
/// BoundScanError if an expanded vertex has no finite branching bound.
SearchOutcome search(const SearchConfig& config, const SearchHooks& hooks = {});

/// Continues from a checkpoint. Throws DigestMismatch if the checkpoint was
/// taken under a different config, ConfigError if a frontier set fails
/// revalidation.
SearchOutcome resume(const Checkpoint& checkpoint, const SearchConfig& config, const SearchHooks& hooks = {});

/// Every finite R-basis with max <= max_element, in lexicographic order.
std::vector<IntSet> enumerate_all(const SpecPair& pair, Int max_element, TreeOptions opts = {});
void for_each_basis(const SpecPair& pair, Int max_element, const std::function<void(const Vertex&)>& fn,
                    TreeOptions opts = {});

}  // namespace rbasis
