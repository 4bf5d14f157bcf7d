#pragma once

#include <cstddef>
#include <vector>

#include "catalyxis/probvec.hpp"
#include "catalyxis/rational.hpp"

namespace catalyxis {

/// pmax(p ⊗ r, q ⊗ r); equals 1 iff r catalyses p -> q.
Rational pmax_catalyzed(const ProbVec& p, const ProbVec& q, const ProbVec& r);

/// majorization_distance(p ⊗ r, q ⊗ r); zero iff r catalyses p -> q.
Rational delta_catalyzed(const ProbVec& p, const ProbVec& q, const ProbVec& r);

/// Exact test of p ⊗ r ≺ q ⊗ r.
bool is_catalyst(const ProbVec& p, const ProbVec& q, const ProbVec& r);

struct CurveSample {
  Rational t;
  Rational pmax;
  Rational delta;
  bool is_catalytic = false;
};

struct TransformCurve {
  ProbVec p;
  ProbVec q;
  std::vector<CurveSample> samples;
};

/// Evaluates the qubit catalyst (1-t, t) at t = j / (2 (samples-1)),
/// j = 0 .. samples-1. Requires samples >= 2.
TransformCurve curve(const ProbVec& p, const ProbVec& q, std::size_t samples);

CurveSample sample_qubit(const ProbVec& p, const ProbVec& q, const Rational& t);

}  // namespace catalyxis
