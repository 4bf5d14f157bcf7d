#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "catalyxis/bounds.hpp"
#include "catalyxis/majorization.hpp"
#include "catalyxis/metrics.hpp"
#include "catalyxis/problem_io.hpp"
#include "catalyxis/search.hpp"

namespace catalyxis {

// Machine-readable documents behind the CLI subcommands. Every JSON document
// carries "schema_version" and no timestamps, so output is a pure function
// of the inputs.

using Json = nlohmann::ordered_json;

/// {"exact": "3/11", "decimal": 0.2727...}
Json rational_json(const Rational& x);
/// As rational_json, with "exact": "inf" and "decimal": null for infinity.
Json extended_json(const ExtendedRational& x);
Rational rational_from_json(const Json& j);
ExtendedRational extended_from_json(const Json& j);

/// Everything the closed-form bounds say about p -> q.
struct BoundsReport {
  BoundsReport(ProbVec p_in, ProbVec q_in) : p(std::move(p_in)), q(std::move(q_in)) {}

  ProbVec p;
  ProbVec q;
  PrefilterReport prefilter;
  EntanglementBounds entanglement;
  bool plateau_excludes = false;
  QubitWindow window;
  DimensionBound dimension;
  SandersBounds sanders;
  ViolationSet reverse_violations;  // q -> p direction
  // Present when the problem supplies a candidate catalyst.
  std::optional<ProbVec> candidate;
  std::optional<CandidateVerdict> candidate_verdict;
  std::optional<bool> candidate_is_catalyst;
};

/// Throws Error(NotIncomparable) unless the pair is incomparable.
BoundsReport build_bounds_report(const ProblemFile& problem);
Json to_json(const BoundsReport& report);
/// Inverse of to_json(BoundsReport); throws Error(Parse) on schema mismatch.
BoundsReport bounds_report_from_json(const Json& doc);
bool same_report(const BoundsReport& a, const BoundsReport& b);

Json check_document(const ProblemFile& problem);

/// Throws Error(NotIncomparable) unless the pair is incomparable.
Json scan_document(const ProblemFile& problem, const ScanOptions& options);

Json search_document(const ProblemFile& problem, std::size_t k, std::size_t resolution,
                     const SearchOptions& options);

/// "t,pmax,delta,catalytic" rows, decimals at 12 significant digits
/// (round half to even), LF line endings.
std::string curve_csv(const TransformCurve& curve);
inline constexpr int kCsvSignificantDigits = 12;

}  // namespace catalyxis
