#include "catalyxis/majorization.hpp"

#include <algorithm>
#include <optional>

namespace catalyxis {

std::string_view to_string(MajorizationOrder order) noexcept {
  switch (order) {
    case MajorizationOrder::FirstMajorizedBySecond: return "FirstMajorizedBySecond";
    case MajorizationOrder::SecondMajorizedByFirst: return "SecondMajorizedByFirst";
    case MajorizationOrder::Equal: return "Equal";
    case MajorizationOrder::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

std::pair<ProbVec, ProbVec> pad_to_common(const ProbVec& p, const ProbVec& q) {
  const std::size_t d = std::max(p.size(), q.size());
  return {p.padded(d), q.padded(d)};
}

std::vector<Rational> partial_sum_gaps(const ProbVec& p, const ProbVec& q) {
  const std::size_t d = std::max(p.size(), q.size());
  std::vector<Rational> gaps;
  gaps.reserve(d);
  Rational running;
  for (std::size_t i = 0; i < d; ++i) {
    if (i < p.size()) running += p[i];
    if (i < q.size()) running -= q[i];
    gaps.push_back(running);
  }
  return gaps;
}

MajorizationOrder compare(const ProbVec& p, const ProbVec& q) {
  bool p_exceeds = false;
  bool q_exceeds = false;
  for (const auto& gap : partial_sum_gaps(p, q)) {
    p_exceeds |= gap.sign() > 0;
    q_exceeds |= gap.sign() < 0;
  }
  if (p_exceeds && q_exceeds) return MajorizationOrder::Incomparable;
  if (p_exceeds) return MajorizationOrder::SecondMajorizedByFirst;
  if (q_exceeds) return MajorizationOrder::FirstMajorizedBySecond;
  return MajorizationOrder::Equal;
}

ViolationSet violation_set(const ProbVec& p, const ProbVec& q) {
  ViolationSet set;
  const auto gaps = partial_sum_gaps(p, q);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i].sign() > 0) set.indices.push_back(i + 1);
  }
  if (!set.empty()) {
    set.m = set.indices.front();
    set.n = set.indices.back();
  }
  return set;
}

Rational majorization_distance(const ProbVec& p, const ProbVec& q) {
  const auto gaps = partial_sum_gaps(p, q);
  // The last gap is exactly zero, so the maximum is never negative.
  return Rational(2) * *std::max_element(gaps.begin(), gaps.end());
}

Rational pmax(const ProbVec& p, const ProbVec& q) {
  const auto [pp, qq] = pad_to_common(p, q);
  std::optional<Rational> best;
  Rational tail_p(1);
  Rational tail_q(1);
  for (std::size_t l = 0; l < pp.size(); ++l) {
    if (l > 0) {
      tail_p -= pp[l - 1];
      tail_q -= qq[l - 1];
    }
    if (tail_q.is_zero()) continue;  // +infinity or skipped: never the minimum
    Rational ratio = tail_p / tail_q;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return *best;  // l = 1 always gives 1/1
}

}  // namespace catalyxis
