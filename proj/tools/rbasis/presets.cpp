#include "presets.hpp"

#include <charconv>
#include <map>

#include "rbasis/errors.hpp"

namespace rbasis::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Int to_int(std::string_view s, std::string_view preset) {
  s = trim(s);
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw ConfigError("preset " + std::string(preset) + ": \"" + std::string(s) + "\" is not a nonnegative integer");
  return v;
}

std::vector<std::string_view> split_args(std::string_view body) {
  std::vector<std::string_view> out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      out.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

SpecPair expand_preset(std::string_view spec) {
  spec = trim(spec);
  std::string_view name = spec;
  std::vector<std::string_view> args;
  if (auto open = spec.find('('); open != std::string_view::npos) {
    if (spec.back() != ')') throw ConfigError("preset " + std::string(spec) + ": missing ')'");
    name = trim(spec.substr(0, open));
    args = split_args(spec.substr(open + 1, spec.size() - open - 2));
  }

  SpecPair pair{SeqSpec::singleton_index(), SeqSpec::singleton_index(), 0, std::nullopt};
  if (name == "dowd") {
    if (args.size() != 2) throw ConfigError("preset dowd takes (h,c)");
    const Int h = to_int(args[0], name);
    const Int c = to_int(args[1], name);
    if (h < 1 || c < 1) throw ConfigError("preset dowd needs h >= 1 and c >= 1");
    pair.H = SeqSpec::constant(FiniteSet::single(h));
    pair.R = SeqSpec::interval(1, c);
  } else if (name == "exact-f") {
    if (args.size() < 2) throw ConfigError("preset exact-f takes (h,default[,n:value...])");
    const Int h = to_int(args[0], name);
    const Int fallback = to_int(args[1], name);
    if (h < 1 || fallback < 1) throw ConfigError("preset exact-f needs h >= 1 and positive values");
    std::map<Int, Int> values;
    for (std::size_t i = 2; i < args.size(); ++i) {
      const auto colon = args[i].find(':');
      if (colon == std::string_view::npos) throw ConfigError("preset exact-f: entries are n:value");
      const Int v = to_int(args[i].substr(colon + 1), name);
      if (v < 1) throw ConfigError("preset exact-f: values must be positive");
      values[to_int(args[i].substr(0, colon), name)] = v;
    }
    pair.H = SeqSpec::constant(FiniteSet::single(h));
    pair.R = SeqSpec::exact(values, fallback);
  } else if (name == "paper-example") {
    if (!args.empty()) throw ConfigError("preset paper-example takes no arguments");
    pair.H = SeqSpec::singleton_index();
    pair.R = SeqSpec::table({{0, FiniteSet::single(1)}}, SeqSpec::constant(FiniteSet::of({1, 2})));
  } else {
    throw ConfigError("unknown preset \"" + std::string(name) + "\"");
  }
  // Round-trip through the loader so presets obey the same validation.
  return spec_pair_from_json(pair.to_json());
}

std::vector<std::string> preset_usage() {
  return {"dowd(h,c)", "exact-f(h,default[,n:value...])", "paper-example"};
}

}  // namespace rbasis::cli
