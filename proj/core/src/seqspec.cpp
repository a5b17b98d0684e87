#include "rbasis/seqspec.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <variant>

#include "rbasis/errors.hpp"

namespace rbasis {

namespace {

struct Constant {
  FiniteSet set;
};
struct Interval {
  Int lo;
  Int hi;
};
struct Table {
  std::map<Int, FiniteSet> entries;
  SeqSpec fallback;
};
struct SingletonIndex {};

}  // namespace

struct SeqSpec::Rule {
  std::variant<Constant, Interval, Table, SingletonIndex> body;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

SeqSpec SeqSpec::constant(FiniteSet set) {
  return SeqSpec(std::make_shared<const Rule>(Rule{Constant{std::move(set)}}));
}

SeqSpec SeqSpec::interval(Int lo, Int hi) {
  if (lo < 1 || lo > hi)
    throw std::invalid_argument("interval rule needs 1 <= lo <= hi, got [" + std::to_string(lo) +
                                "," + std::to_string(hi) + "]");
  return SeqSpec(std::make_shared<const Rule>(Rule{Interval{lo, hi}}));
}

SeqSpec SeqSpec::table(std::map<Int, FiniteSet> entries, SeqSpec fallback) {
  return SeqSpec(
      std::make_shared<const Rule>(Rule{Table{std::move(entries), std::move(fallback)}}));
}

SeqSpec SeqSpec::singleton_index() {
  return SeqSpec(std::make_shared<const Rule>(Rule{SingletonIndex{}}));
}

SeqSpec SeqSpec::exact(const std::map<Int, Int>& values, Int fallback) {
  std::map<Int, FiniteSet> entries;
  for (auto [n, v] : values) entries.emplace(n, FiniteSet::single(v));
  return table(std::move(entries), constant(FiniteSet::single(fallback)));
}

SeqSpec::Kind SeqSpec::kind() const noexcept {
  return std::visit(overloaded{[](const Constant&) { return Kind::constant; },
                               [](const Interval&) { return Kind::interval; },
                               [](const Table&) { return Kind::table; },
                               [](const SingletonIndex&) { return Kind::singleton_index; }},
                    rule_->body);
}

FiniteSet SeqSpec::eval(Int n) const {
  return std::visit(overloaded{[](const Constant& c) { return c.set; },
                               [](const Interval& i) { return FiniteSet::range(i.lo, i.hi); },
                               [n](const Table& t) {
                                 auto it = t.entries.find(n);
                                 return it != t.entries.end() ? it->second : t.fallback.eval(n);
                               },
                               [n](const SingletonIndex&) { return FiniteSet::single(n == 0 ? 1 : n); }},
                    rule_->body);
}

Int SeqSpec::max_at(Int n) const {
  return std::visit(overloaded{[](const Constant& c) { return c.set.max(); },
                               [](const Interval& i) { return i.hi; },
                               [n](const Table& t) {
                                 auto it = t.entries.find(n);
                                 return it != t.entries.end() ? it->second.max() : t.fallback.max_at(n);
                               },
                               [n](const SingletonIndex&) { return n == 0 ? Int{1} : n; }},
                    rule_->body);
}

Int SeqSpec::max_over(Int lo, Int hi) const {
  if (lo > hi) throw std::invalid_argument("max_over: empty range");
  return std::visit(overloaded{[](const Constant& c) { return c.set.max(); },
                               [](const Interval& i) { return i.hi; },
                               [&](const Table& t) {
                                 Int best = 0;
                                 Int covered = 0;
                                 for (auto it = t.entries.lower_bound(lo);
                                      it != t.entries.end() && it->first <= hi; ++it) {
                                   best = std::max(best, it->second.max());
                                   ++covered;
                                 }
                                 if (covered < hi - lo + 1) best = std::max(best, t.fallback.max_over(lo, hi));
                                 return best;
                               },
                               [&](const SingletonIndex&) { return std::max<Int>(hi, 1); }},
                    rule_->body);
}

bool operator==(const SeqSpec& a, const SeqSpec& b) {
  if (a.rule_ == b.rule_) return true;
  return a.to_json() == b.to_json();
}

namespace {

nlohmann::json set_json(const FiniteSet& s) { return s.elements(); }

}  // namespace

nlohmann::json SeqSpec::to_json() const {
  using nlohmann::json;
  return std::visit(
      overloaded{[](const Constant& c) { return json{{"kind", "constant"}, {"set", set_json(c.set)}}; },
                 [](const Interval& i) { return json{{"kind", "interval"}, {"lo", i.lo}, {"hi", i.hi}}; },
                 [](const Table& t) {
                   json entries = json::object();
                   for (const auto& [n, s] : t.entries) entries[std::to_string(n)] = set_json(s);
                   return json{{"kind", "table"}, {"entries", entries}, {"default", t.fallback.to_json()}};
                 },
                 [](const SingletonIndex&) { return json{{"kind", "singleton_index"}}; }},
      rule_->body);
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

Int read_uint(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a nonnegative integer");
  if (j.is_number_unsigned()) return j.get<Int>();
  auto v = j.get<std::int64_t>();
  if (v < 0) fail(where, "expected a nonnegative integer, got " + std::to_string(v));
  return static_cast<Int>(v);
}

Int read_positive(const json& j, const std::string& where) {
  Int v = read_uint(j, where);
  if (v == 0) fail(where, "expected a positive integer, got 0");
  return v;
}

FiniteSet read_set(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of positive integers");
  if (j.empty()) fail(where, "set must be nonempty");
  std::vector<Int> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_positive(j[i], where + "[" + std::to_string(i) + "]"));
  return FiniteSet::of(std::move(v));
}

Int read_index_key(const std::string& key, const std::string& where) {
  Int n = 0;
  auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
  if (ec != std::errc{} || p != key.data() + key.size() || key.empty())
    fail(where, "entry key \"" + key + "\" is not a nonnegative integer");
  return n;
}

// An exact-rule value: integer or one-element array.
Int read_exact_value(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 1) fail(where, "exact rule values must be a single integer");
    return read_positive(j[0], where + "[0]");
  }
  return read_positive(j, where);
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, _] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) == allowed.end())
      fail(where, "unknown key \"" + k + "\"");
  }
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

SeqSpec rule_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "rule must be an object");
  const json& kind_j = require(j, "kind", where);
  if (!kind_j.is_string()) fail(where + ".kind", "expected a string");
  const auto kind = kind_j.get<std::string>();
  if (kind == "constant") {
    expect_keys(j, {"kind", "set"}, where);
    return SeqSpec::constant(read_set(require(j, "set", where), where + ".set"));
  }
  if (kind == "interval") {
    expect_keys(j, {"kind", "lo", "hi"}, where);
    Int lo = read_positive(require(j, "lo", where), where + ".lo");
    Int hi = read_positive(require(j, "hi", where), where + ".hi");
    if (lo > hi) fail(where, "interval lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    return SeqSpec::interval(lo, hi);
  }
  if (kind == "table") {
    expect_keys(j, {"kind", "entries", "default"}, where);
    const json& entries_j = require(j, "entries", where);
    if (!entries_j.is_object()) fail(where + ".entries", "expected an object");
    std::map<Int, FiniteSet> entries;
    for (const auto& [k, v] : entries_j.items())
      entries.emplace(read_index_key(k, where + ".entries"), read_set(v, where + ".entries." + k));
    return SeqSpec::table(std::move(entries), rule_from_json(require(j, "default", where), where + ".default"));
  }
  if (kind == "singleton_index") {
    expect_keys(j, {"kind"}, where);
    return SeqSpec::singleton_index();
  }
  if (kind == "exact") {
    expect_keys(j, {"kind", "entries", "default"}, where);
    std::map<Int, Int> values;
    if (auto it = j.find("entries"); it != j.end()) {
      if (!it->is_object()) fail(where + ".entries", "expected an object");
      for (const auto& [k, v] : it->items())
        values.emplace(read_index_key(k, where + ".entries"), read_exact_value(v, where + ".entries." + k));
    }
    return SeqSpec::exact(values, read_exact_value(require(j, "default", where), where + ".default"));
  }
  fail(where + ".kind", "unknown rule kind \"" + kind + "\"");
}

}  // namespace

SeqSpec SeqSpec::from_json(const nlohmann::json& j) { return rule_from_json(j, "rule"); }

nlohmann::json SpecPair::to_json() const {
  json j{{"H", H.to_json()}, {"R", R.to_json()}, {"start_index", start_index}};
  if (seed) j["seed"] = std::vector<Int>(seed->begin(), seed->end());
  return j;
}

SpecPair spec_pair_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("config", "document must be a JSON object");
  expect_keys(j, {"H", "R", "start_index", "seed"}, "config");
  SpecPair pair{rule_from_json(require(j, "H", "config"), "H"),
                rule_from_json(require(j, "R", "config"), "R"), 0, std::nullopt};
  if (auto it = j.find("start_index"); it != j.end()) pair.start_index = read_uint(*it, "start_index");
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_array() || it->empty()) fail("seed", "expected a nonempty array of nonnegative integers");
    std::vector<Int> v;
    for (std::size_t i = 0; i < it->size(); ++i) v.push_back(read_uint((*it)[i], "seed[" + std::to_string(i) + "]"));
    pair.seed = IntSet(std::move(v));
  }

  if (pair.full_mode()) {
    if (pair.seed) fail("seed", "a seed is only meaningful with start_index > 0");
    for (Int n : {Int{0}, Int{1}}) {
      const Int card = pair.H.eval(n).size();
      const FiniteSet target = pair.R.eval(n);
      if (!target.contains(card))
        fail("config", "necessary condition card(H_" + std::to_string(n) + ") in R_" + std::to_string(n) +
                           " violated: card(H_" + std::to_string(n) + ") = " + std::to_string(card) +
                           " is not in R_" + std::to_string(n) + " = " + target.to_string());
    }
  } else if (!pair.seed) {
    fail("seed", "start_index > 0 requires a seed set");
  }
  return pair;
}

SpecPair parse_spec_pair(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return spec_pair_from_json(j);
}

}  // namespace rbasis
