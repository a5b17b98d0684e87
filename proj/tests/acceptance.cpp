// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "rbasis/basis.hpp"
#include "rbasis/errors.hpp"
#include "rbasis/oracle.hpp"
#include "rbasis/repfn.hpp"
#include "rbasis/search.hpp"
#include "rbasis/tree.hpp"
#include "support.hpp"

namespace {

using namespace rbasis;
using rbasis::testing::constant_pair;
using rbasis::testing::dowd_pair;

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no time limit
  std::function<std::string()> body;  // returns a short detail string
};

// --- 1 ---------------------------------------------------------------------

std::string counting_oracle_equivalence() {
  std::size_t checked = 0;
  for (const IntSet& A : rbasis::testing::all_small_sets(12, 5)) {
    for (Int h = 1; h <= 4; ++h) {
      for (Int n = 0; n <= 24; ++n) {
        const Count fast_u = rep_unordered(A, n, h);
        const Count slow_u = oracle::rep_unordered_naive(A, n, h);
        require(fast_u == slow_u, "unordered mismatch at A=" + A.to_string() + " n=" + std::to_string(n) +
                                      " h=" + std::to_string(h));
        const Count fast_o = rep_ordered(A, n, h);
        const Count slow_o = oracle::rep_ordered_naive(A, n, h);
        require(fast_o == slow_o, "ordered mismatch at A=" + A.to_string() + " n=" + std::to_string(n) +
                                      " h=" + std::to_string(h));
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " (A,n,h) triples";
}

// --- 2 ---------------------------------------------------------------------

std::string ordered_unordered_bridge() {
  std::mt19937_64 rng(20261016);
  BigInt factorial[9] = {1};
  for (int i = 1; i < 9; ++i) factorial[i] = factorial[i - 1] * i;
  for (int trial = 0; trial < 1000; ++trial) {
    IntSet A = rbasis::testing::random_set(rng, 12, 5);
    if (A.empty()) A = IntSet{0};
    const Int h = std::uniform_int_distribution<Int>(1, 4)(rng);
    const Int n = std::uniform_int_distribution<Int>(0, 4 * 12)(rng);
    BigInt weighted = 0;
    oracle::for_each_nondecreasing_tuple(A, h, [&](std::span<const Int> t) {
      Int sum = 0;
      for (Int x : t) sum += x;
      if (sum != n) return;
      BigInt w = factorial[h];
      for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        w /= factorial[j - i];
        i = j;
      }
      weighted += w;
    });
    require(rep_ordered(A, n, h) == Count(weighted),
            "bridge mismatch at A=" + A.to_string() + " n=" + std::to_string(n) + " h=" + std::to_string(h));
  }
  return "1000 random instances";
}

// --- 3 ---------------------------------------------------------------------

std::string structural_necessities() {
  const SeqSpec two = SeqSpec::constant(FiniteSet::single(2));
  const SeqSpec two_three = SeqSpec::constant(FiniteSet::of({2, 3}));
  struct Case {
    SpecPair pair;
    Int M;
  };
  const std::vector<Case> cases = {
      {constant_pair(2, {1}), 12},
      {dowd_pair(2, 1, 2), 12},
      {dowd_pair(2, 1, 3), 11},
      {dowd_pair(2, 1, 4), 10},
      {dowd_pair(3, 1, 2), 11},
      {dowd_pair(3, 1, 3), 10},
      {constant_pair(2, {1, 3}), 12},
      {SpecPair{two_three, SeqSpec::interval(2, 6), 0, std::nullopt}, 9},
      {SpecPair{two, SeqSpec::exact({{4, 2}, {6, 2}}, 1), 0, std::nullopt}, 12},
      {rbasis::testing::singleton_pair(), 10},
  };
  std::size_t bases = 0;
  for (const auto& c : cases) {
    require(necessary_conditions(c.pair).ok, "necessary conditions fail for a test pair");
    const BasisTree tree(c.pair);
    for (const IntSet& A : enumerate_all(c.pair, c.M)) {
      ++bases;
      const std::string tag = A.to_string();
      require(is_finite_R_basis(A, c.pair).ok, "enumerated set is not an R-basis: " + tag);
      if (A.max() >= 1) require(A.contains(0) && A.contains(1), "0 or 1 missing from " + tag);
      require(rep_generalized(A, 0, c.pair.H.eval(0)) == Count(c.pair.H.eval(0).size()), "r(0) != card(H_0) for " + tag);
      if (A.contains(1)) {
        require(rep_generalized(A, 1, c.pair.H.eval(1)) == Count(c.pair.H.eval(1).size()),
                "r(1) != card(H_1) for " + tag);
      }
      for (Int a : A) require(is_finite_R_basis(A.truncated(a), c.pair).ok, "truncation of " + tag + " fails");
      if (A != IntSet{0}) {
        const Vertex p = tree.parent(tree.load(A));
        require(p.set == A.without_max() && is_finite_R_basis(p.set, c.pair).ok, "parent of " + tag + " invalid");
      }
    }
  }
  return std::to_string(bases) + " bases over 10 pairs";
}

// --- 4 ---------------------------------------------------------------------

std::string unit_interval_example() {
  const SpecPair pair = rbasis::testing::singleton_pair();
  require(check_window({0, 1}, pair, 500).ok, "check_window({0,1}, W=500) not ok");
  const RepProfile p = build_profile({0, 1}, pair.H, 500);
  for (Int n = 0; n <= 500; ++n) require(p.counts[n] == Count(Int{1}), "r(" + std::to_string(n) + ") != 1");
  return "r = 1 on [0, 500]";
}

// --- 5 ---------------------------------------------------------------------

std::string interval_construction() {
  const IntervalConstruction c = interval_basis_construction(3, SeqSpec::singleton_index(), 500);
  require(c.report.ok, "construction for [0,3] reported violations");
  require(c.witnesses.size() == 501, "expected one witness per n in [0, 500]");
  const SeqSpec H = SeqSpec::singleton_index();
  for (const auto& w : c.witnesses) {
    const auto parts = w.parts(3);
    Int sum = 0;
    for (Int x : parts) {
      require(x <= 3, "witness part outside [0,3]");
      sum += x;
    }
    require(sum == w.n && w.q * 3 + w.r == w.n && w.r < 3, "division witness wrong at n=" + std::to_string(w.n));
    require(H.eval(w.n).contains(w.h) && parts.size() == w.h, "witness length not in H_n at n=" + std::to_string(w.n));
  }
  const CheckReport nec = check_reach_necessity({0, 1}, SeqSpec::constant(FiniteSet::single(2)), 3);
  require(!nec.ok && nec.violations.size() == 1 && nec.violations[0].n == 3, "necessity check did not reject n=3");
  return "501 witnesses; necessity rejects n=3";
}

// --- 6, 7, 8 ---------------------------------------------------------------

struct Expansion {
  SpecPair pair;
  Vertex v;
  std::vector<Vertex> children;
};
std::vector<Expansion> g_expanded;  // filled by 6 and 7, audited by 8

SearchHooks recording_hooks(const SpecPair& pair) {
  SearchHooks hooks;
  hooks.on_expand = [pair](const Vertex& v, std::span<const Vertex> kids) {
    g_expanded.push_back({pair, v, std::vector<Vertex>(kids.begin(), kids.end())});
  };
  return hooks;
}

SearchConfig config_for(SpecPair pair, Int target) {
  return SearchConfig{.pair = std::move(pair),
                      .target = target,
                      .strategy = Strategy::dfs_smallest_first,
                      .budget = 1'000'000,
                      .checkpoint_every = 0,
                      .parallel = 0,
                      .tree = {}};
}

std::string tree_exhaustion() {
  const SpecPair pair = constant_pair(2, {1});
  const std::size_t before = g_expanded.size();
  const SearchOutcome out = search(config_for(pair, 10), recording_hooks(pair));
  require(out.kind == SearchOutcome::Kind::exhausted, std::string("expected exhausted, got ") + to_string(out.kind));
  std::vector<IntSet> seen;
  for (std::size_t i = before; i < g_expanded.size(); ++i) seen.push_back(g_expanded[i].v.set);
  std::sort(seen.begin(), seen.end());
  const std::vector<IntSet> expected{{0}, {0, 1}, {0, 1, 3}, {0, 1, 3, 5}};
  require(seen == expected, "vertex set differs from {0},{0,1},{0,1,3},{0,1,3,5}");
  require(seen == oracle::all_R_bases_naive(pair, 8), "vertex set differs from the subset sweep over [0,8]");
  require(out.stats.deepest_max == 5 && out.stats.deepest == IntSet({0, 1, 3, 5}), "deepest vertex is not {0,1,3,5}");
  require(out.stats.visited == 4 && out.stats.max_depth == 4, "certificate counts differ");
  return "4 vertices, deepest {0,1,3,5}";
}

std::string witness_reachability() {
  for (Int K = 0; K <= 20; ++K) {
    const IntSet A = IntSet::interval(0, K);
    for (Int n = 0; n <= K; ++n) {
      require(oracle::rep_unordered_naive(A, n, 2).value() == n / 2 + 1, "closed form fails at K=" + std::to_string(K));
    }
  }
  const SpecPair pair = dowd_pair(2, 1, 100);
  const SearchOutcome out = search(config_for(pair, 100), recording_hooks(pair));
  require(out.kind == SearchOutcome::Kind::found && out.witness, "expected a witness");
  const IntSet& w = *out.witness;
  require(w.max() >= 100, "witness max below 100");
  // From scratch: exact counts, no search state.
  const RepProfile p = build_profile(w, pair.H, w.max());
  for (Int n = 0; n <= w.max(); ++n) {
    require(p.counts[n].in(pair.R.eval(n)), "witness fails at n=" + std::to_string(n));
  }
  require(is_finite_R_basis(w, pair).ok, "witness fails is_finite_R_basis");
  return "witness max " + std::to_string(w.max()) + ", " + std::to_string(out.stats.expanded) + " expansions";
}

std::string tree_properties() {
  require(!g_expanded.empty(), "no expansions were recorded");
  for (const auto& e : g_expanded) {
    const BasisTree tree(e.pair);
    for (const auto& c : e.children) {
      require(tree.parent(c).set == e.v.set && BasisTree::is_adjacent(e.v, c),
              "parent/children roundtrip fails at " + c.set.to_string());
      for (Int n = 0; n <= e.v.max(); ++n) {
        require(c.profile.counts[n] == e.v.profile.counts[n], "profile prefix differs at " + c.set.to_string());
      }
    }
    const CandidateBound b = tree.candidate_bound(e.v);
    require(b.finite, "bound scan not finite at " + e.v.set.to_string());
    for (Int m = b.bound + 1; m <= b.bound + 50; ++m) {
      require(!is_finite_R_basis(e.v.set.with_max(m), e.pair).ok,
              "valid child beyond the bound: " + e.v.set.to_string() + " + " + std::to_string(m));
    }
  }
  return std::to_string(g_expanded.size()) + " expanded vertices audited";
}

// --- 9 ---------------------------------------------------------------------

std::string determinism_and_resume() {
  std::string reference;
  for (unsigned width : {0u, 4u}) {
    SearchConfig config = config_for(constant_pair(2, {1}), 10);
    config.parallel = width;
    const std::string full = search(config).to_json().dump();
    require(search(config).to_json().dump() == full, "repeat run differs at width " + std::to_string(width));
    if (reference.empty()) reference = full;
    require(full == reference, "parallel outcome differs from sequential");

    for (std::uint64_t cut = 1; cut <= 3; ++cut) {
      SearchConfig limited = config;
      limited.budget = cut;
      const SearchOutcome partial = search(limited);
      require(partial.kind == SearchOutcome::Kind::budget_exceeded, "interrupted run was not cut off");
      const Checkpoint cp = Checkpoint::from_json(nlohmann::json::parse(partial.checkpoint.to_json().dump()));
      require(resume(cp, config).to_json().dump() == full,
              "resumed outcome differs (width " + std::to_string(width) + ", cut " + std::to_string(cut) + ")");
    }
  }
  return "sequential and width 4, cuts after 1..3 expansions";
}

// --- 10 --------------------------------------------------------------------

std::string bounded_representation_non_claim() {
  for (Int c : {3, 5, 10}) {
    SearchConfig config = config_for(dowd_pair(2, 1, c), Int{1} << 40);
    config.budget = 300;
    const SearchOutcome out = search(config);
    require(out.kind == SearchOutcome::Kind::budget_exceeded,
            "dowd(2," + std::to_string(c) + ") returned " + to_string(out.kind));
    require(!out.checkpoint.frontier.empty(), "checkpoint has an empty frontier");
    // Valid checkpoint: it round-trips, every frontier set revalidates, and it
    // continues the same run.
    const Checkpoint cp = Checkpoint::from_json(nlohmann::json::parse(out.checkpoint.to_json().dump()));
    require(cp.digest == config_digest(config), "checkpoint digest does not match the config");
    SearchConfig more = config;
    more.budget = 600;
    const SearchOutcome continued = resume(cp, more);
    const SearchOutcome straight = search(more);
    require(continued.kind == SearchOutcome::Kind::budget_exceeded, "continued run returned a verdict");
    require(continued.to_json().dump() == straight.to_json().dump(), "continued run differs from a straight run");
  }
  return "dowd(2,c) for c = 3, 5, 10 at budget 300";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counting oracle equivalence", 30.0, counting_oracle_equivalence},
      {2, "ordered/unordered multinomial bridge", 0.0, ordered_unordered_bridge},
      {3, "structural necessities on enumerated bases", 0.0, structural_necessities},
      {4, "{0,1} under H_n = {n}, window 500", 1.0, unit_interval_example},
      {5, "interval construction and reach necessity", 1.0, interval_construction},
      {6, "tree exhaustion for H = {2}, R = {1}", 1.0, tree_exhaustion},
      {7, "witness reachability for H = {2}, R = [1,100]", 10.0, witness_reachability},
      {8, "tree structure on expanded vertices", 0.0, tree_properties},
      {9, "determinism and resume", 0.0, determinism_and_resume},
      {10, "bounded-representation instance stays undecided", 0.0, bounded_representation_non_claim},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      std::ostringstream s;
      s << "took " << secs << " s, limit " << c.limit_seconds << " s";
      detail = s.str();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.3f s) - %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
