#include "rbasis/search.hpp"

#include <chrono>
#include <deque>
#include <future>
#include <map>
#include <stdexcept>

#include <openssl/evp.h>

#include "rbasis/basis.hpp"
#include "rbasis/errors.hpp"

namespace rbasis {

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::dfs_smallest_first:
      return "dfs-smallest-first";
    case Strategy::dfs_largest_first:
      return "dfs-largest-first";
    case Strategy::bfs:
      return "bfs";
    case Strategy::iterative_deepening:
      return "iterative-deepening";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : {Strategy::dfs_smallest_first, Strategy::dfs_largest_first, Strategy::bfs,
                     Strategy::iterative_deepening}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

const char* to_string(SearchOutcome::Kind k) noexcept {
  switch (k) {
    case SearchOutcome::Kind::found:
      return "found";
    case SearchOutcome::Kind::exhausted:
      return "exhausted";
    case SearchOutcome::Kind::budget_exceeded:
      return "budget";
  }
  return "?";
}

namespace {

using nlohmann::json;

json set_json(const IntSet& s) { return std::vector<Int>(s.begin(), s.end()); }

IntSet set_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected an array");
  std::vector<Int> v;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw ConfigError(std::string(what) + ": expected nonnegative integers");
    v.push_back(e.get<Int>());
  }
  return IntSet(std::move(v));
}

template <class T>
T field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("checkpoint: missing \"") + key + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("checkpoint: bad value for \"") + key + "\"");
  }
}

}  // namespace

void SearchStats::record(const IntSet& s) {
  ++visited;
  max_depth = std::max(max_depth, s.size());
  const Int top = s.max();
  if (deepest.empty() || top > deepest_max || (top == deepest_max && s < deepest)) {
    deepest_max = top;
    deepest = s;
  }
}

nlohmann::ordered_json SearchStats::to_json() const {
  nlohmann::ordered_json j;
  j["expanded"] = expanded;
  j["deepest_max"] = deepest_max;
  j["visited"] = visited;
  j["max_depth"] = max_depth;
  j["deepest"] = set_json(deepest);
  return j;
}

SearchStats SearchStats::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("stats: expected an object");
  SearchStats s;
  s.expanded = field<std::uint64_t>(j, "expanded");
  s.visited = field<std::uint64_t>(j, "visited");
  s.max_depth = field<std::size_t>(j, "max_depth");
  s.deepest_max = field<Int>(j, "deepest_max");
  s.deepest = set_from_json(j.at("deepest"), "stats.deepest");
  return s;
}

nlohmann::ordered_json Checkpoint::to_json() const {
  json frontier_j = json::array();
  for (const auto& s : frontier) frontier_j.push_back(set_json(s));
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["digest"] = digest;
  j["strategy"] = rbasis::to_string(strategy);
  j["stats"] = stats.to_json();
  j["depth_limit"] = depth_limit;
  j["cutoff"] = cutoff;
  j["frontier"] = frontier_j;
  return j;
}

Checkpoint Checkpoint::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("checkpoint: expected an object");
  const int version = field<int>(j, "version");
  if (version != kVersion)
    throw ConfigError("checkpoint: unsupported version " + std::to_string(version));
  Checkpoint c;
  c.digest = field<std::string>(j, "digest");
  const auto strategy = parse_strategy(field<std::string>(j, "strategy"));
  if (!strategy) throw ConfigError("checkpoint: unknown strategy");
  c.strategy = *strategy;
  const json& frontier = j.contains("frontier") ? j["frontier"] : json();
  if (!frontier.is_array()) throw ConfigError("checkpoint: frontier must be an array");
  for (const auto& s : frontier) c.frontier.push_back(set_from_json(s, "checkpoint.frontier"));
  if (!j.contains("stats")) throw ConfigError("checkpoint: missing \"stats\"");
  c.stats = SearchStats::from_json(j["stats"]);
  c.depth_limit = field<std::size_t>(j, "depth_limit");
  c.cutoff = field<bool>(j, "cutoff");
  return c;
}

nlohmann::ordered_json SearchOutcome::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = rbasis::to_string(kind);
  j["mode"] = asymptotic ? "asymptotic" : "full";
  j["witness"] = witness ? set_json(*witness) : json(nullptr);
  j["stats"] = stats.to_json();
  j["checkpoint_path"] = checkpoint_path ? json(*checkpoint_path) : json(nullptr);
  return j;
}

std::string config_digest(const SearchConfig& config) {
  const json j{{"pair", config.pair.to_json()},
               {"target", config.target},
               {"strategy", to_string(config.strategy)},
               {"tree", {{"stretch_factor", config.tree.stretch_factor}, {"hard_cap", config.tree.hard_cap}}}};
  const std::string text = j.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

namespace {

class Frontier {
 public:
  explicit Frontier(Strategy s) : strategy_(s) {}

  bool empty() const { return items_.empty(); }
  void clear() { items_.clear(); }

  Vertex pop() {
    if (strategy_ == Strategy::bfs) {
      Vertex v = std::move(items_.front());
      items_.pop_front();
      return v;
    }
    Vertex v = std::move(items_.back());
    items_.pop_back();
    return v;
  }

  // Undoes pop().
  void put_back(Vertex v) {
    if (strategy_ == Strategy::bfs)
      items_.push_front(std::move(v));
    else
      items_.push_back(std::move(v));
  }

  // Children arrive in increasing order of their new maximum.
  void push_children(std::vector<Vertex>&& kids) {
    switch (strategy_) {
      case Strategy::dfs_smallest_first:
      case Strategy::iterative_deepening:
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) items_.push_back(std::move(*it));
        break;
      case Strategy::dfs_largest_first:
      case Strategy::bfs:
        for (auto& k : kids) items_.push_back(std::move(k));
        break;
    }
  }

  void push_raw(Vertex v) { items_.push_back(std::move(v)); }

  // The next k vertices in pop order.
  template <class F>
  void for_upcoming(std::size_t k, F&& f) const {
    if (strategy_ == Strategy::bfs) {
      for (std::size_t i = 0; i < k && i < items_.size(); ++i) f(items_[i]);
    } else {
      for (std::size_t i = 0; i < k && i < items_.size(); ++i) f(items_[items_.size() - 1 - i]);
    }
  }

  std::vector<IntSet> sets() const {
    std::vector<IntSet> out;
    out.reserve(items_.size());
    for (const auto& v : items_) out.push_back(v.set);
    return out;
  }

 private:
  Strategy strategy_;
  std::deque<Vertex> items_;
};

// Computes children, optionally expanding upcoming frontier vertices ahead of
// time on worker threads. Results are consumed strictly in frontier order, so
// the outcome does not depend on the width.
class Expander {
 public:
  Expander(const BasisTree& tree, unsigned width) : tree_(tree), width_(width) {}

  template <class Skip>
  std::vector<Vertex> expand(const Vertex& v, const Frontier& upcoming, Skip&& skip) {
    if (width_ == 0) return tree_.children(v);
    auto prefetch = [&] {
      upcoming.for_upcoming(width_, [&](const Vertex& u) {
        if (!skip(u)) launch(u);
      });
    };
    auto it = pending_.find(v.set);
    if (it == pending_.end()) {
      prefetch();
      return tree_.children(v);
    }
    auto fut = std::move(it->second);
    pending_.erase(it);
    prefetch();
    return fut.get();
  }

 private:
  void launch(const Vertex& v) {
    if (pending_.contains(v.set) || in_flight() >= width_) return;
    pending_.emplace(v.set, std::async(std::launch::async, [this, v] { return tree_.children(v); }));
  }

  std::size_t in_flight() const {
    std::size_t n = 0;
    for (const auto& [_, f] : pending_) {
      if (f.wait_for(std::chrono::seconds(0)) != std::future_status::ready) ++n;
    }
    return n;
  }

  const BasisTree& tree_;
  unsigned width_;
  std::map<IntSet, std::future<std::vector<Vertex>>> pending_;
};

void verify_witness(const IntSet& w, const SpecPair& pair) {
  const CheckReport report = is_finite_R_basis(w, pair, {.violation_limit = 1});
  if (!report.ok) throw std::logic_error("search produced an invalid witness " + w.to_string());
  if (pair.full_mode() && w.max() >= 1 && !(w.contains(0) && w.contains(1)))
    throw std::logic_error("witness " + w.to_string() + " lacks 0 or 1");
}

SearchOutcome run(const BasisTree& tree, const SearchConfig& config, Frontier frontier, SearchStats stats,
                  std::size_t depth_limit, bool cutoff, const SearchHooks& hooks) {
  const std::string digest = config_digest(config);
  const bool deepening = config.strategy == Strategy::iterative_deepening;
  Expander expander(tree, config.parallel);

  auto snapshot = [&](const Frontier& f, const SearchStats& s) {
    return Checkpoint{digest, config.strategy, f.sets(), s, depth_limit, cutoff};
  };
  auto at_limit = [&](const Vertex& v) { return deepening && v.set.size() >= depth_limit; };

  SearchOutcome out;
  out.asymptotic = !config.pair.full_mode();

  for (;;) {
    if (frontier.empty()) {
      if (deepening && cutoff) {
        ++depth_limit;
        cutoff = false;
        frontier.push_raw(tree.root());
        continue;
      }
      out.kind = SearchOutcome::Kind::exhausted;
      out.stats = stats;
      out.checkpoint = snapshot(frontier, stats);
      return out;
    }

    Vertex v = frontier.pop();
    const SearchStats before = stats;
    stats.record(v.set);

    if (v.max() >= config.target) {
      verify_witness(v.set, config.pair);
      out.kind = SearchOutcome::Kind::found;
      out.witness = v.set;
      out.stats = stats;
      frontier.put_back(std::move(v));
      out.checkpoint = snapshot(frontier, before);
      return out;
    }
    if (at_limit(v)) {
      cutoff = true;
      continue;
    }
    if (stats.expanded >= config.budget) {
      frontier.put_back(std::move(v));
      out.kind = SearchOutcome::Kind::budget_exceeded;
      out.stats = before;
      out.checkpoint = snapshot(frontier, before);
      return out;
    }

    std::vector<Vertex> kids = expander.expand(v, frontier, at_limit);
    ++stats.expanded;
    if (hooks.on_expand) hooks.on_expand(v, kids);
    frontier.push_children(std::move(kids));
    if (hooks.on_progress) hooks.on_progress(stats);
    if (config.checkpoint_every != 0 && stats.expanded % config.checkpoint_every == 0 && hooks.on_checkpoint)
      hooks.on_checkpoint(snapshot(frontier, stats));
  }
}

void validate(const SearchConfig& config) {
  if (config.budget < 1) throw std::invalid_argument("search budget must be at least 1");
  if (config.pair.full_mode()) {
    const CheckReport nc = necessary_conditions(config.pair);
    if (!nc.ok) {
      const Violation& v = nc.violations.front();
      throw ConfigError("necessary condition card(H_" + std::to_string(v.n) + ") in R_" + std::to_string(v.n) +
                        " fails; no finite R-basis beyond {0} can exist");
    }
  }
}

}  // namespace

SearchOutcome search(const SearchConfig& config, const SearchHooks& hooks) {
  validate(config);
  const BasisTree tree(config.pair, config.tree);
  Frontier frontier(config.strategy);
  frontier.push_raw(tree.root());
  return run(tree, config, std::move(frontier), SearchStats{}, 1, false, hooks);
}

SearchOutcome resume(const Checkpoint& checkpoint, const SearchConfig& config, const SearchHooks& hooks) {
  validate(config);
  if (checkpoint.digest != config_digest(config))
    throw DigestMismatch("checkpoint digest " + checkpoint.digest.substr(0, 12) +
                         "... does not match the current configuration");
  if (checkpoint.strategy != config.strategy) throw DigestMismatch("checkpoint strategy differs from config");
  const BasisTree tree(config.pair, config.tree);
  Frontier frontier(config.strategy);
  for (const auto& s : checkpoint.frontier) frontier.push_raw(tree.load(s));
  return run(tree, config, std::move(frontier), checkpoint.stats, checkpoint.depth_limit, checkpoint.cutoff, hooks);
}

void for_each_basis(const SpecPair& pair, Int max_element, const std::function<void(const Vertex&)>& fn,
                    TreeOptions opts) {
  const BasisTree tree(pair, opts);
  if (pair.full_mode()) {
    if (!pair.R.eval(0).contains(pair.H.eval(0).size())) return;
  }
  if (tree.root_set().max() > max_element) return;
  std::vector<Vertex> stack{tree.root()};
  while (!stack.empty()) {
    Vertex v = std::move(stack.back());
    stack.pop_back();
    fn(v);
    auto kids = tree.children(v, max_element);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
  }
}

std::vector<IntSet> enumerate_all(const SpecPair& pair, Int max_element, TreeOptions opts) {
  std::vector<IntSet> out;
  for_each_basis(pair, max_element, [&](const Vertex& v) { out.push_back(v.set); }, opts);
  return out;
}

}  // namespace rbasis
