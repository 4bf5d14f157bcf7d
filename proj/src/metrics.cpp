#include "catalyxis/metrics.hpp"

#include "catalyxis/error.hpp"
#include "catalyxis/majorization.hpp"

namespace catalyxis {

Rational pmax_catalyzed(const ProbVec& p, const ProbVec& q, const ProbVec& r) {
  return pmax(tensor(p, r), tensor(q, r));
}

Rational delta_catalyzed(const ProbVec& p, const ProbVec& q, const ProbVec& r) {
  return majorization_distance(tensor(p, r), tensor(q, r));
}

bool is_catalyst(const ProbVec& p, const ProbVec& q, const ProbVec& r) {
  const auto order = compare(tensor(p, r), tensor(q, r));
  return order == MajorizationOrder::FirstMajorizedBySecond || order == MajorizationOrder::Equal;
}

CurveSample sample_qubit(const ProbVec& p, const ProbVec& q, const Rational& t) {
  const ProbVec r = ProbVec::qubit(t);
  const ProbVec pr = tensor(p, r);
  const ProbVec qr = tensor(q, r);
  CurveSample s;
  s.t = t;
  s.pmax = pmax(pr, qr);
  s.delta = majorization_distance(pr, qr);
  s.is_catalytic = s.delta.is_zero();
  return s;
}

TransformCurve curve(const ProbVec& p, const ProbVec& q, std::size_t samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "curve needs at least 2 samples");
  TransformCurve out{p, q, {}};
  out.samples.reserve(samples);
  const long denominator = 2 * static_cast<long>(samples - 1);
  for (std::size_t j = 0; j < samples; ++j) {
    out.samples.push_back(sample_qubit(p, q, Rational(static_cast<long>(j), denominator)));
  }
  return out;
}

}  // namespace catalyxis
