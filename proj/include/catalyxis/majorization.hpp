#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "catalyxis/probvec.hpp"
#include "catalyxis/rational.hpp"

namespace catalyxis {

enum class MajorizationOrder {
  FirstMajorizedBySecond,  // p ≺ q: p converts to q by LOCC with certainty
  SecondMajorizedByFirst,  // q ≺ p
  Equal,
  Incomparable,
};

std::string_view to_string(MajorizationOrder order) noexcept;

/// Indices l (1-based, as in the partial-sum criterion) at which the p
/// partial sum strictly exceeds the q partial sum.
struct ViolationSet {
  std::vector<std::size_t> indices;
  std::size_t m = 0;  // min(indices), 0 when empty
  std::size_t n = 0;  // max(indices), 0 when empty

  bool empty() const noexcept { return indices.empty(); }
  friend bool operator==(const ViolationSet&, const ViolationSet&) = default;
};

/// Both vectors padded to their common length.
std::pair<ProbVec, ProbVec> pad_to_common(const ProbVec& p, const ProbVec& q);

/// Element l-1 is sum_{i<=l} (p_i - q_i) over the zero-padded vectors.
std::vector<Rational> partial_sum_gaps(const ProbVec& p, const ProbVec& q);

MajorizationOrder compare(const ProbVec& p, const ProbVec& q);

/// Violations in the p -> q direction; empty iff p ≺ q.
ViolationSet violation_set(const ProbVec& p, const ProbVec& q);

/// Twice the largest partial-sum excess of p over q; zero iff p ≺ q.
Rational majorization_distance(const ProbVec& p, const ProbVec& q);

/// Vidal's optimal conversion probability min_l E_l(p) / E_l(q), with
/// E_l(x) = 1 - sum_{i<l} x_i. Indices where both tails vanish are skipped;
/// a vanishing q tail alone contributes +infinity.
Rational pmax(const ProbVec& p, const ProbVec& q);

}  // namespace catalyxis
