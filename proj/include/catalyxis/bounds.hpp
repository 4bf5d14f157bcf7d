#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "catalyxis/majorization.hpp"
#include "catalyxis/probvec.hpp"
#include "catalyxis/rational.hpp"

namespace catalyxis {

// Necessary conditions on a catalyst r for the transformation p -> q.
// Every routine here treats the pair in the p -> q direction; vectors of
// different length are zero-padded to a common dimension d.

enum class PrefilterVerdict { CatalysisImpossible, NotExcluded };
std::string_view to_string(PrefilterVerdict verdict) noexcept;

struct PrefilterReport {
  bool p1_le_q1 = false;     // largest coefficient may not grow
  bool pd_ge_qd = false;     // smallest coefficient may not shrink
  bool headsum_ok = false;   // sum of the first d-1 entries of p <= that of q
  bool dimension_ok = false; // d >= 4
  MajorizationOrder order = MajorizationOrder::Incomparable;
  PrefilterVerdict verdict = PrefilterVerdict::NotExcluded;
  /// Nonempty when the pair is comparable and the flags carry no catalysis
  /// meaning.
  std::string note;
};

PrefilterReport prefilter(const ProbVec& p, const ProbVec& q);

/// Limits any catalyst must respect. A catalyst r (sorted, zero entries
/// dropped) needs every consecutive ratio r_v / r_{v+1} strictly below
/// `max_step_ratio` and r_1 / r_k strictly above `min_span_ratio`.
struct EntanglementBounds {
  ExtendedRational max_step_ratio;  // min(q_1/q_m, q_{n+1}/q_d)
  ExtendedRational min_span_ratio;  // max over l in L of q_l/q_{l+1}
  std::size_t m = 0;
  std::size_t n = 0;
  ViolationSet violations;
};

/// Throws Error(NotIncomparable) when p ≺ q.
EntanglementBounds entanglement_bounds(const ProbVec& p, const ProbVec& q);

/// True iff q_1 = q_m or q_{n+1} = q_d, in which case no catalyst exists.
/// Throws Error(NotIncomparable) when p ≺ q.
bool plateau_excludes(const ProbVec& p, const ProbVec& q);

/// Interval (lo, hi) that t must lie strictly inside for (1-t, t) to catalyse.
struct QubitWindow {
  Rational lo;
  Rational hi;
  bool empty = true;
};

QubitWindow qubit_window(const EntanglementBounds& bounds);
QubitWindow qubit_window(const ProbVec& p, const ProbVec& q);

struct DimensionBound {
  bool catalyst_possible = false;
  /// Least admissible catalyst dimension; meaningful when catalyst_possible.
  std::size_t k_min = 0;
  /// ln(b)/ln(a) + 1 as a real number; NaN when no catalyst is possible.
  double value = 0.0;
};

DimensionBound dimension_lower_bound(const EntanglementBounds& bounds);
DimensionBound dimension_lower_bound(const ProbVec& p, const ProbVec& q);

/// e_j(p), the sum of all j-fold products. Throws Error(IndexOutOfRange)
/// unless 0 <= j <= p.size().
Rational elementary_symmetric(const ProbVec& p, std::size_t j);

/// Comparison bounds built from elementary symmetric polynomials.
struct SandersBounds {
  std::size_t d = 0;
  bool dim_applicable = false;
  double dim_bound = 0.0;
  bool dim_trivial = true;     // dim_bound < 2
  bool ratio_applicable = false;
  std::optional<Rational> ratio_bound;  // -(e_3(p)-e_3(q)) / (e_2(p)-e_2(q))
  bool ratio_trivial = true;   // ratio_bound <= 0
  std::string note;            // why a bound is inapplicable
  // Populated when a candidate catalyst is supplied.
  std::optional<Rational> candidate_ratio;
  std::optional<bool> candidate_satisfies;
};

/// R(r) = (e_2(r) - 2 e_3(r)) / (1 - 2 e_2(r) + 3 e_3(r)).
Rational sanders_ratio(const ProbVec& r);

/// Throws Error(NotIncomparable) when p ≺ q. Zero denominators mark the
/// affected bound inapplicable instead of throwing.
SandersBounds sanders_bounds(const ProbVec& p, const ProbVec& q,
                             const std::optional<ProbVec>& candidate = std::nullopt);

enum class CandidateVerdict {
  NotExcluded,
  ExcludedByPrefilter,
  ExcludedByStepRatio,  // some r_v / r_{v+1} >= max_step_ratio
  ExcludedBySpanRatio,  // r_1 / r_k <= min_span_ratio
};
std::string_view to_string(CandidateVerdict verdict) noexcept;

/// Applies the necessary conditions to a proposed catalyst. A pair with
/// p ≺ q needs no catalyst, so every r is NotExcluded.
CandidateVerdict check_candidate(const ProbVec& p, const ProbVec& q, const ProbVec& r);

/// Largest r_v / r_{v+1} over the nonzero entries of r; 1 for a single entry.
Rational max_consecutive_ratio(const ProbVec& r);
/// r_1 / r_k over the nonzero entries of r.
Rational span_ratio(const ProbVec& r);

}  // namespace catalyxis
