#include "catalyxis/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "catalyxis/error.hpp"

namespace catalyxis {
namespace {

// Beyond this many factors the exact a^(k-1) > b check is skipped and the
// floating-point estimate stands.
constexpr std::size_t kExactPowerCeiling = 4096;

ViolationSet require_violations(const ProbVec& p, const ProbVec& q) {
  auto set = violation_set(p, q);
  if (set.empty()) {
    throw Error(ErrorCode::NotIncomparable,
                "p is majorized by q; catalyst bounds need a violated partial sum");
  }
  return set;
}

// e_0 .. e_size of the entries, by adding one variable at a time.
std::vector<Rational> symmetric_polynomials(std::span<const Rational> x) {
  std::vector<Rational> e(x.size() + 1);
  e[0] = Rational(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * x[i];
  }
  return e;
}

Rational symmetric_or_zero(const std::vector<Rational>& e, std::size_t j) {
  return j < e.size() ? e[j] : Rational(0);
}

}  // namespace

std::string_view to_string(PrefilterVerdict verdict) noexcept {
  return verdict == PrefilterVerdict::CatalysisImpossible ? "CatalysisImpossible"
                                                          : "NotExcluded";
}

std::string_view to_string(CandidateVerdict verdict) noexcept {
  switch (verdict) {
    case CandidateVerdict::NotExcluded: return "NotExcluded";
    case CandidateVerdict::ExcludedByPrefilter: return "ExcludedByPrefilter";
    case CandidateVerdict::ExcludedByStepRatio: return "ExcludedByStepRatio";
    case CandidateVerdict::ExcludedBySpanRatio: return "ExcludedBySpanRatio";
  }
  return "Unknown";
}

PrefilterReport prefilter(const ProbVec& p, const ProbVec& q) {
  const auto [pp, qq] = pad_to_common(p, q);
  const std::size_t d = pp.size();
  PrefilterReport report;
  report.order = compare(pp, qq);
  report.p1_le_q1 = pp[0] <= qq[0];
  report.pd_ge_qd = pp[d - 1] >= qq[d - 1];
  const auto gaps = partial_sum_gaps(pp, qq);
  report.headsum_ok = d < 2 || gaps[d - 2].sign() <= 0;
  report.dimension_ok = d >= 4;
  const bool all_ok =
      report.p1_le_q1 && report.pd_ge_qd && report.headsum_ok && report.dimension_ok;
  report.verdict = all_ok ? PrefilterVerdict::NotExcluded : PrefilterVerdict::CatalysisImpossible;
  if (report.order != MajorizationOrder::Incomparable) {
    report.note = "pair is comparable (" + std::string(to_string(report.order)) +
                  "); the flags only constrain incomparable pairs";
  }
  return report;
}

EntanglementBounds entanglement_bounds(const ProbVec& p, const ProbVec& q) {
  const auto [pp, qq] = pad_to_common(p, q);
  const std::size_t d = qq.size();
  EntanglementBounds bounds;
  bounds.violations = require_violations(pp, qq);
  bounds.m = bounds.violations.m;
  bounds.n = bounds.violations.n;

  // Indices below are 1-based to match the violation set; q[i - 1] is q_i.
  const auto q_at = [&](std::size_t i) -> const Rational& { return qq[i - 1]; };
  bounds.max_step_ratio =
      std::min(ExtendedRational::ratio(q_at(1), q_at(bounds.m)),
               ExtendedRational::ratio(q_at(bounds.n + 1), q_at(d)));

  ExtendedRational span = Rational(0);
  for (std::size_t l : bounds.violations.indices) {
    span = std::max(span, ExtendedRational::ratio(q_at(l), q_at(l + 1)));
  }
  bounds.min_span_ratio = span;
  return bounds;
}

bool plateau_excludes(const ProbVec& p, const ProbVec& q) {
  const auto [pp, qq] = pad_to_common(p, q);
  const auto set = require_violations(pp, qq);
  const std::size_t d = qq.size();
  return qq[0] == qq[set.m - 1] || qq[set.n] == qq[d - 1];
}

QubitWindow qubit_window(const EntanglementBounds& bounds) {
  QubitWindow window;
  // t > 1/(a+1) and t < 1/(b+1); an infinite ratio pins its endpoint at 0.
  window.lo = bounds.max_step_ratio.is_infinite()
                  ? Rational(0)
                  : Rational(1) / (bounds.max_step_ratio.value() + Rational(1));
  window.hi = bounds.min_span_ratio.is_infinite()
                  ? Rational(0)
                  : Rational(1) / (bounds.min_span_ratio.value() + Rational(1));
  window.empty = window.lo >= window.hi;
  return window;
}

QubitWindow qubit_window(const ProbVec& p, const ProbVec& q) {
  return qubit_window(entanglement_bounds(p, q));
}

DimensionBound dimension_lower_bound(const EntanglementBounds& bounds) {
  DimensionBound result;
  result.value = std::numeric_limits<double>::quiet_NaN();
  const auto& a = bounds.max_step_ratio;
  const auto& b = bounds.min_span_ratio;
  if (b.is_infinite()) return result;
  if (a.is_infinite()) {
    result.catalyst_possible = true;
    result.k_min = 2;
    result.value = 1.0;
    return result;
  }
  if (a.value() <= Rational(1)) return result;

  result.catalyst_possible = true;
  result.value = b.value().ln() / a.value().ln() + 1.0;

  // Least k with a^(k-1) > b, floored at 2.
  auto k = static_cast<std::size_t>(std::max(2.0, std::floor(result.value) + 1.0));
  if (k <= kExactPowerCeiling) {
    const auto exceeds = [&](std::size_t kk) { return a.value().pow(kk - 1) > b.value(); };
    while (k > 2 && exceeds(k - 1)) --k;
    while (!exceeds(k)) ++k;
  }
  result.k_min = k;
  return result;
}

DimensionBound dimension_lower_bound(const ProbVec& p, const ProbVec& q) {
  return dimension_lower_bound(entanglement_bounds(p, q));
}

Rational elementary_symmetric(const ProbVec& p, std::size_t j) {
  if (j > p.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "elementary symmetric index " + std::to_string(j) +
                                                " exceeds dimension " + std::to_string(p.size()));
  }
  return symmetric_polynomials(p.entries())[j];
}

Rational sanders_ratio(const ProbVec& r) {
  const auto e = symmetric_polynomials(r.entries());
  const Rational e2 = symmetric_or_zero(e, 2);
  const Rational e3 = symmetric_or_zero(e, 3);
  return (e2 - Rational(2) * e3) / (Rational(1) - Rational(2) * e2 + Rational(3) * e3);
}

SandersBounds sanders_bounds(const ProbVec& p, const ProbVec& q,
                             const std::optional<ProbVec>& candidate) {
  const auto [pp, qq] = pad_to_common(p, q);
  require_violations(pp, qq);
  const std::size_t d = pp.size();
  const auto ep = symmetric_polynomials(pp.entries());
  const auto eq = symmetric_polynomials(qq.entries());

  SandersBounds out;
  out.d = d;
  std::vector<std::string> notes;

  const Rational& top_p = ep[d];
  const Rational& top_q = eq[d];
  const Rational& sub_p = ep[d - 1];
  const Rational& sub_q = eq[d - 1];
  if (top_p == top_q) {
    notes.emplace_back("dimension bound: e_d(p) = e_d(q) (zero denominator)");
  } else if (top_p.is_zero() || top_q.is_zero() || sub_p.is_zero() || sub_q.is_zero()) {
    notes.emplace_back("dimension bound: a vanishing e_d or e_(d-1) leaves the logarithm undefined");
  } else {
    out.dim_applicable = true;
    out.dim_bound = (sub_q / sub_p).ln() / (top_p / top_q).ln() + 1.0;
    out.dim_trivial = out.dim_bound < 2.0;
  }

  const Rational e2_gap = symmetric_or_zero(ep, 2) - symmetric_or_zero(eq, 2);
  const Rational e3_gap = symmetric_or_zero(ep, 3) - symmetric_or_zero(eq, 3);
  if (e2_gap.is_zero()) {
    notes.emplace_back("ratio bound: e_2(p) = e_2(q) (zero denominator)");
  } else {
    out.ratio_applicable = true;
    out.ratio_bound = -e3_gap / e2_gap;
    out.ratio_trivial = out.ratio_bound->sign() <= 0;
  }

  if (candidate) {
    out.candidate_ratio = sanders_ratio(*candidate);
    if (out.ratio_bound) out.candidate_satisfies = *out.candidate_ratio >= *out.ratio_bound;
  }

  for (std::size_t i = 0; i < notes.size(); ++i) {
    out.note += (i ? "; " : "") + notes[i];
  }
  return out;
}

Rational max_consecutive_ratio(const ProbVec& r) {
  const ProbVec nz = r.without_zeros();
  Rational best(1);
  for (std::size_t v = 0; v + 1 < nz.size(); ++v) best = std::max(best, nz[v] / nz[v + 1]);
  return best;
}

Rational span_ratio(const ProbVec& r) {
  const ProbVec nz = r.without_zeros();
  return nz[0] / nz[nz.size() - 1];
}

CandidateVerdict check_candidate(const ProbVec& p, const ProbVec& q, const ProbVec& r) {
  if (violation_set(p, q).empty()) return CandidateVerdict::NotExcluded;
  if (prefilter(p, q).verdict == PrefilterVerdict::CatalysisImpossible) {
    return CandidateVerdict::ExcludedByPrefilter;
  }
  const auto bounds = entanglement_bounds(p, q);
  if (bounds.min_span_ratio.is_infinite() ||
      span_ratio(r) <= bounds.min_span_ratio.value()) {
    return CandidateVerdict::ExcludedBySpanRatio;
  }
  if (!bounds.max_step_ratio.is_infinite() &&
      max_consecutive_ratio(r) >= bounds.max_step_ratio.value()) {
    return CandidateVerdict::ExcludedByStepRatio;
  }
  return CandidateVerdict::NotExcluded;
}

}  // namespace catalyxis
