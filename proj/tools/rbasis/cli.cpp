#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "presets.hpp"
#include "rbasis/basis.hpp"
#include "rbasis/errors.hpp"
#include "rbasis/oracle.hpp"
#include "rbasis/repfn.hpp"
#include "rbasis/search.hpp"

namespace rbasis::cli {

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  bool dump_config = false;

  std::vector<std::string> set_args;
  std::optional<Int> window;
  bool oracle = false;

  Int target = 0;
  std::string strategy = "dfs-smallest-first";
  std::uint64_t budget = 1'000'000;
  std::string checkpoint_path = "rbasis-checkpoint.json";
  std::uint64_t checkpoint_every = 0;
  std::string resume_path;
  unsigned parallel = 0;
  double heartbeat_seconds = 10.0;

  Int max_element = 0;
  std::string preset_name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw ConfigError("cannot write " + tmp);
    o << text << '\n';
  }
  std::filesystem::rename(tmp, path);
}

SpecPair load_pair(const Options& o) {
  if (!o.config_path.empty()) return parse_spec_pair(read_file(o.config_path));
  if (!o.preset.empty()) return expand_preset(o.preset);
  throw ConfigError("one of --config or --preset is required");
}

IntSet parse_set(const std::vector<std::string>& args) {
  std::vector<Int> elems;
  for (const auto& arg : args) {
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        if (tok.front() == '-') throw std::invalid_argument(tok);
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        throw ConfigError("set element \"" + tok + "\" is not a nonnegative integer");
      }
      if (used != tok.size()) throw ConfigError("set element \"" + tok + "\" is not a nonnegative integer");
      elems.push_back(v);
    }
  }
  if (elems.empty()) throw ConfigError("the set must be nonempty");
  return IntSet(std::move(elems));
}

std::string count_text(const Count& c) {
  return c.saturated() ? "\"" + c.to_string() + "\"" : c.value().str();
}

CheckReport oracle_check(const IntSet& A, const SpecPair& pair, Int W) {
  CheckReport report;
  report.window_lo = pair.start_index;
  report.window_hi = W;
  for (Int n = pair.start_index; n <= W; ++n) {
    BigInt r = 0;
    pair.H.eval(n).for_each([&](Int h) { r += oracle::rep_unordered_naive(A, n, h).value(); });
    FiniteSet target = pair.R.eval(n);
    if (!Count(r).in(target)) {
      report.ok = false;
      report.violations.push_back(
          {n, Count(r), std::move(target), r == 0 ? Violation::Kind::below_one : Violation::Kind::not_in_R});
    }
  }
  return report;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SpecPair pair = load_pair(o);
  const IntSet A = parse_set(o.set_args);
  const Int W = o.window.value_or(A.max());
  const CheckReport report = o.oracle ? oracle_check(A, pair, W) : check_window(A, pair, W);
  out << report.to_json().dump() << '\n';
  return report.ok ? kOk : kViolation;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const SpecPair pair = load_pair(o);
  const IntSet A = parse_set(o.set_args);
  const RepProfile p = build_profile(A, pair.H, o.window.value_or(A.max()));
  for (Int n = 0; n <= p.window; ++n) out << "{\"n\":" << n << ",\"r\":" << count_text(p.counts[n]) << "}\n";
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchConfig config{.pair = load_pair(o),
                      .target = o.target,
                      .strategy = Strategy::dfs_smallest_first,
                      .budget = o.budget,
                      .checkpoint_every = o.checkpoint_every,
                      .parallel = o.parallel,
                      .tree = {}};
  const auto strategy = parse_strategy(o.strategy);
  if (!strategy) throw ConfigError("unknown strategy \"" + o.strategy + "\"");
  config.strategy = *strategy;

  using Clock = std::chrono::steady_clock;
  auto last_beat = Clock::now();
  SearchHooks hooks;
  if (o.heartbeat_seconds > 0) {
    hooks.on_progress = [&](const SearchStats& s) {
      if ((s.expanded & 255) != 0) return;
      const auto now = Clock::now();
      if (std::chrono::duration<double>(now - last_beat).count() < o.heartbeat_seconds) return;
      last_beat = now;
      err << "[rbasis] expanded=" << s.expanded << " visited=" << s.visited << " deepest_max=" << s.deepest_max
          << " max_depth=" << s.max_depth << std::endl;
    };
  }
  hooks.on_checkpoint = [&](const Checkpoint& c) { write_file_atomic(o.checkpoint_path, c.to_json().dump()); };

  SearchOutcome outcome;
  if (!o.resume_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o.resume_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("malformed checkpoint: ") + e.what());
    }
    outcome = resume(Checkpoint::from_json(j), config, hooks);
  } else {
    outcome = search(config, hooks);
  }

  if (outcome.kind == SearchOutcome::Kind::budget_exceeded) {
    write_file_atomic(o.checkpoint_path, outcome.checkpoint.to_json().dump());
    outcome.checkpoint_path = o.checkpoint_path;
  }
  out << outcome.to_json().dump() << '\n';
  switch (outcome.kind) {
    case SearchOutcome::Kind::found:
      return kOk;
    case SearchOutcome::Kind::exhausted:
      return kExhausted;
    case SearchOutcome::Kind::budget_exceeded:
      return kBudget;
  }
  return kUsage;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const SpecPair pair = load_pair(o);
  auto emit = [&](const IntSet& s) { out << nlohmann::json{{"set", std::vector<Int>(s.begin(), s.end())}}.dump() << '\n'; };
  if (o.oracle) {
    for (const auto& s : oracle::all_R_bases_naive(pair, o.max_element)) emit(s);
  } else {
    for_each_basis(pair, o.max_element, [&](const Vertex& v) { emit(v.set); });
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite R-bases of order H: checks, profiles, tree search and enumeration", "rbasis"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string presets_help = "Named preset:";
  for (const auto& p : preset_usage()) presets_help += " " + p;
  auto* config_opt = app.add_option("--config", o.config_path, "SpecPair JSON file");
  auto* preset_opt = app.add_option("--preset", o.preset, presets_help);
  config_opt->excludes(preset_opt);
  app.add_flag("--dump-config", o.dump_config, "Print the resolved SpecPair JSON and exit");

  auto* check = app.add_subcommand("check", "Check that a set is a finite R-basis");
  check->add_option("set", o.set_args, "Elements, space- or comma-separated")->required();
  check->add_option("--window", o.window, "Check n up to W instead of max(set)");
  check->add_flag("--oracle", o.oracle)->group("");

  auto* profile = app.add_subcommand("profile", "Dump r(n, H_n) for n in [0, W] as JSON lines");
  profile->add_option("set", o.set_args, "Elements, space- or comma-separated")->required();
  profile->add_option("--window", o.window, "Last n to report (default max(set))");

  auto* search_cmd = app.add_subcommand("search", "Search the tree of finite R-bases for one with max >= N");
  search_cmd->add_option("--target", o.target, "N")->required();
  search_cmd->add_option("--strategy", o.strategy,
                         "dfs-smallest-first | dfs-largest-first | bfs | iterative-deepening")
      ->capture_default_str();
  search_cmd->add_option("--budget", o.budget, "Maximum expansions")->capture_default_str();
  search_cmd->add_option("--checkpoint", o.checkpoint_path, "Checkpoint file")->capture_default_str();
  search_cmd->add_option("--checkpoint-every", o.checkpoint_every, "Write a checkpoint every K expansions");
  search_cmd->add_option("--resume", o.resume_path, "Resume from a checkpoint file");
  search_cmd->add_option("--parallel", o.parallel, "Worker threads expanding ahead (0 = sequential)");
  search_cmd->add_option("--heartbeat", o.heartbeat_seconds, "Seconds between progress lines on stderr (0 = off)")
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List every finite R-basis with max <= M as JSON lines");
  enumerate->add_option("--max-element", o.max_element, "M")->required();
  enumerate->add_flag("--oracle", o.oracle)->group("");

  auto* preset_cmd = app.add_subcommand("preset", "Print the SpecPair JSON a preset expands to");
  preset_cmd->add_option("name", o.preset_name, "Preset")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.dump_config) {
      out << load_pair(o).to_json().dump() << '\n';
      return kOk;
    }
    if (*preset_cmd) {
      out << expand_preset(o.preset_name).to_json().dump() << '\n';
      return kOk;
    }
    if (*check) return cmd_check(o, out);
    if (*profile) return cmd_profile(o, out);
    if (*search_cmd) return cmd_search(o, out, err);
    if (*enumerate) return cmd_enumerate(o, out);
    err << app.help();
    return kUsage;
  } catch (const BoundScanError& e) {
    err << "rbasis: " << e.what() << '\n';
    return kBoundCap;
  } catch (const Error& e) {
    err << "rbasis: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rbasis: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rbasis::cli
