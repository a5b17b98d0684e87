#include "rbasis/basis.hpp"

#include <stdexcept>

#include "rbasis/repfn.hpp"

namespace rbasis {

const char* to_string(Violation::Kind kind) noexcept {
  switch (kind) {
    case Violation::Kind::below_one:
      return "below-one";
    case Violation::Kind::not_in_R:
      return "not-in-R";
    case Violation::Kind::necessity:
      return "necessity";
    case Violation::Kind::precondition:
      return "precondition";
  }
  return "?";
}

namespace {

nlohmann::json count_json(const Count& c) {
  if (!c.saturated() && c.value() <= std::numeric_limits<Int>::max()) return c.value().convert_to<Int>();
  return c.to_string();
}

class ReportBuilder {
 public:
  ReportBuilder(Int lo, Int hi, CheckOptions opts) : opts_(opts) {
    report_.window_lo = lo;
    report_.window_hi = hi;
  }

  void add(Violation v) {
    report_.ok = false;
    if (report_.violations.size() < opts_.violation_limit)
      report_.violations.push_back(std::move(v));
    else
      report_.truncated = true;
  }

  bool full() const { return report_.violations.size() >= opts_.violation_limit; }

  CheckReport finish() && { return std::move(report_); }

 private:
  CheckOptions opts_;
  CheckReport report_;
};

CheckReport check_membership(const IntSet& A, const SpecPair& pair, Int W, CheckOptions opts) {
  ReportBuilder out(pair.start_index, W, opts);
  if (pair.start_index > W) return std::move(out).finish();
  const RepProfile p = build_profile(A, pair.H, W, CountCap::per_target(pair.R));
  for (Int n = pair.start_index; n <= W; ++n) {
    FiniteSet target = pair.R.eval(n);
    const Count& got = p.counts[n];
    if (got.in(target)) continue;
    // Reported counts are exact; the sweep only saturates.
    Count exact = got.saturated() && !out.full() ? rep_generalized(A, n, pair.H.eval(n)) : got;
    out.add({n, std::move(exact), std::move(target),
             got.is_zero() ? Violation::Kind::below_one : Violation::Kind::not_in_R});
  }
  return std::move(out).finish();
}

}  // namespace

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json j;
    j["n"] = v.n;
    j["got"] = count_json(v.got);
    j["kind"] = to_string(v.kind);
    if (v.expected) j["expected"] = v.expected->elements();
    vs.push_back(std::move(j));
  }
  nlohmann::ordered_json j;
  j["ok"] = ok;
  j["window"] = {window_lo, window_hi};
  j["violations"] = vs;
  if (truncated) j["truncated"] = true;
  return j;
}

CheckReport is_finite_basis(const IntSet& A, const SeqSpec& H, Int start_index, CheckOptions opts) {
  if (A.empty()) throw std::invalid_argument("is_finite_basis: empty set");
  const Int W = A.max();
  ReportBuilder out(start_index, W, opts);
  if (start_index > W) return std::move(out).finish();
  const RepProfile p = build_profile(A, H, W, CountCap::uniform(1));
  for (Int n = start_index; n <= W; ++n) {
    if (p.counts[n].is_zero()) out.add({n, Count(Int{0}), std::nullopt, Violation::Kind::below_one});
  }
  return std::move(out).finish();
}

CheckReport is_finite_R_basis(const IntSet& A, const SpecPair& pair, CheckOptions opts) {
  if (A.empty()) throw std::invalid_argument("is_finite_R_basis: empty set");
  return check_membership(A, pair, A.max(), opts);
}

CheckReport check_window(const IntSet& A, const SpecPair& pair, Int W, CheckOptions opts) {
  return check_membership(A, pair, W, opts);
}

CheckReport check_reach_necessity(const IntSet& A, const SeqSpec& H, std::optional<Int> W, CheckOptions opts) {
  if (A.empty()) throw std::invalid_argument("check_reach_necessity: empty set");
  const Int top = A.max();
  const Int hi = W.value_or(top);
  ReportBuilder out(1, hi, opts);
  for (Int n = 1; n <= hi; ++n) {
    const BigInt reach = BigInt(H.max_at(n)) * top;
    if (n > reach) out.add({n, Count(reach), std::nullopt, Violation::Kind::necessity});
  }
  return std::move(out).finish();
}

std::vector<Int> IntervalRepresentation::parts(Int m) const {
  std::vector<Int> v;
  v.reserve(h);
  const Int used = q + (r > 0 ? 1 : 0);
  v.insert(v.end(), h - used, 0);
  if (r > 0) v.push_back(r);
  v.insert(v.end(), q, m);
  return v;
}

IntervalConstruction interval_basis_construction(Int m, const SeqSpec& H, Int W, CheckOptions opts) {
  if (m == 0) throw std::invalid_argument("interval_basis_construction: m must be positive");
  IntervalConstruction out;
  ReportBuilder report(0, W, opts);
  for (Int n = 1; n <= W; ++n) {
    const Int hstar = H.max_at(n);
    const Int need = n / m + (n % m != 0 ? 1 : 0);
    if (hstar < need) report.add({n, Count(hstar), std::nullopt, Violation::Kind::precondition});
  }
  out.report = std::move(report).finish();
  if (!out.report.ok) return out;

  ReportBuilder verify(0, W, opts);
  out.witnesses.reserve(W + 1);
  for (Int n = 0; n <= W; ++n) {
    IntervalRepresentation rep{n, H.max_at(n), n / m, n % m};
    const Int used = rep.q + (rep.r > 0 ? 1 : 0);
    const bool sound = used <= rep.h && rep.q * m + rep.r == n && H.eval(n).contains(rep.h);
    if (!sound) verify.add({n, Count(Int{0}), std::nullopt, Violation::Kind::below_one});
    out.witnesses.push_back(rep);
  }
  // Independent confirmation through the counting DP.
  const RepProfile p = build_profile(IntSet::interval(0, m), H, W, CountCap::uniform(1));
  for (Int n = 0; n <= W; ++n) {
    if (p.counts[n].is_zero()) verify.add({n, Count(Int{0}), std::nullopt, Violation::Kind::below_one});
  }
  out.report = std::move(verify).finish();
  if (!out.report.ok) out.witnesses.clear();
  return out;
}

CheckReport necessary_conditions(const SpecPair& pair) {
  ReportBuilder out(0, 1, {});
  for (Int n : {Int{0}, Int{1}}) {
    const Int card = pair.H.eval(n).size();
    FiniteSet target = pair.R.eval(n);
    if (!target.contains(card)) out.add({n, Count(card), std::move(target), Violation::Kind::not_in_R});
  }
  return std::move(out).finish();
}

}  // namespace rbasis
