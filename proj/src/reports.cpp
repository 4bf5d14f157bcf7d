#include "catalyxis/reports.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "catalyxis/error.hpp"

namespace catalyxis {
namespace {

template <typename Enum>
Enum enum_from_string(const std::string& text, std::initializer_list<Enum> values) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::Parse, "unknown enumerator '" + text + "'");
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::Parse, std::string("report is missing '") + key + "'");
  }
  return doc.at(key);
}

Json nullable_double(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double double_from_json(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

bool same_double(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

Json violations_json(const ViolationSet& set) {
  Json j;
  j["indices"] = set.indices;
  j["m"] = set.m;
  j["n"] = set.n;
  return j;
}

ViolationSet violations_from_json(const Json& j) {
  ViolationSet set;
  set.indices = field(j, "indices").get<std::vector<std::size_t>>();
  set.m = field(j, "m").get<std::size_t>();
  set.n = field(j, "n").get<std::size_t>();
  return set;
}

ProbVec vector_from_strings(const Json& j) {
  return ProbVec::parse(j.get<std::vector<std::string>>());
}

Json window_json(const QubitWindow& w) {
  Json j;
  j["lo"] = rational_json(w.lo);
  j["hi"] = rational_json(w.hi);
  j["empty"] = w.empty;
  return j;
}

void require_incomparable(const ProbVec& p, const ProbVec& q) {
  const auto order = compare(p, q);
  if (order != MajorizationOrder::Incomparable) {
    throw Error(ErrorCode::NotIncomparable,
                "pair is comparable (" + std::string(to_string(order)) + "); operation needs an incomparable pair");
  }
}

}  // namespace

Json rational_json(const Rational& x) {
  Json j;
  j["exact"] = x.to_fraction();
  j["decimal"] = x.to_double();
  return j;
}

Json extended_json(const ExtendedRational& x) {
  if (!x.is_infinite()) return rational_json(x.value());
  Json j;
  j["exact"] = "inf";
  j["decimal"] = nullptr;
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational::parse(field(j, "exact").get<std::string>());
}

ExtendedRational extended_from_json(const Json& j) {
  if (field(j, "exact") == "inf") return ExtendedRational::infinity();
  return rational_from_json(j);
}

BoundsReport build_bounds_report(const ProblemFile& problem) {
  require_incomparable(problem.p, problem.q);
  BoundsReport report{problem.p, problem.q};
  report.prefilter = prefilter(problem.p, problem.q);
  report.entanglement = entanglement_bounds(problem.p, problem.q);
  report.plateau_excludes = plateau_excludes(problem.p, problem.q);
  report.window = qubit_window(report.entanglement);
  report.dimension = dimension_lower_bound(report.entanglement);
  report.sanders = sanders_bounds(problem.p, problem.q, problem.r);
  report.reverse_violations = violation_set(problem.q, problem.p);
  if (problem.r) {
    report.candidate = problem.r;
    report.candidate_verdict = check_candidate(problem.p, problem.q, *problem.r);
    report.candidate_is_catalyst = is_catalyst(problem.p, problem.q, *problem.r);
  }
  return report;
}

Json to_json(const BoundsReport& report) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "bounds";
  doc["p"] = vector_json(report.p);
  doc["q"] = vector_json(report.q);
  doc["order"] = to_string(MajorizationOrder::Incomparable);

  const auto& pf = report.prefilter;
  Json prefilter;
  prefilter["p1_le_q1"] = pf.p1_le_q1;
  prefilter["pd_ge_qd"] = pf.pd_ge_qd;
  prefilter["headsum_ok"] = pf.headsum_ok;
  prefilter["dimension_ok"] = pf.dimension_ok;
  prefilter["verdict"] = to_string(pf.verdict);
  prefilter["note"] = pf.note;
  doc["prefilter"] = prefilter;

  const auto& eb = report.entanglement;
  Json ent;
  ent["a"] = extended_json(eb.max_step_ratio);
  ent["b"] = extended_json(eb.min_span_ratio);
  ent["m"] = eb.m;
  ent["n"] = eb.n;
  ent["violation_set"] = eb.violations.indices;
  doc["entanglement_bounds"] = ent;
  doc["plateau_excludes"] = report.plateau_excludes;
  doc["qubit_window"] = window_json(report.window);

  Json dim;
  dim["catalyst_possible"] = report.dimension.catalyst_possible;
  dim["value"] = nullable_double(report.dimension.value);
  dim["k_min"] = report.dimension.catalyst_possible ? Json(report.dimension.k_min) : Json(nullptr);
  doc["dimension_bound"] = dim;

  const auto& sb = report.sanders;
  Json sanders;
  sanders["d"] = sb.d;
  sanders["dim_applicable"] = sb.dim_applicable;
  sanders["dim_bound"] = sb.dim_applicable ? nullable_double(sb.dim_bound) : Json(nullptr);
  sanders["dim_trivial"] = sb.dim_trivial;
  sanders["ratio_applicable"] = sb.ratio_applicable;
  sanders["ratio_bound"] = sb.ratio_bound ? rational_json(*sb.ratio_bound) : Json(nullptr);
  sanders["ratio_trivial"] = sb.ratio_trivial;
  sanders["note"] = sb.note;
  if (sb.candidate_ratio) {
    sanders["candidate_ratio"] = rational_json(*sb.candidate_ratio);
    sanders["candidate_satisfies"] =
        sb.candidate_satisfies ? Json(*sb.candidate_satisfies) : Json(nullptr);
  }
  doc["sanders"] = sanders;
  doc["reverse_violation_set"] = violations_json(report.reverse_violations);

  if (report.candidate) {
    Json cand;
    cand["r"] = vector_json(*report.candidate);
    cand["verdict"] = to_string(*report.candidate_verdict);
    cand["is_catalyst"] = *report.candidate_is_catalyst;
    doc["candidate"] = cand;
  }
  return doc;
}

BoundsReport bounds_report_from_json(const Json& doc) {
  if (field(doc, "schema_version") != kSchemaVersion || field(doc, "command") != "bounds") {
    throw Error(ErrorCode::Parse, "not a bounds report of schema version " + std::to_string(kSchemaVersion));
  }
  BoundsReport report{vector_from_strings(field(doc, "p")), vector_from_strings(field(doc, "q"))};

  const auto& pf = field(doc, "prefilter");
  report.prefilter.p1_le_q1 = field(pf, "p1_le_q1").get<bool>();
  report.prefilter.pd_ge_qd = field(pf, "pd_ge_qd").get<bool>();
  report.prefilter.headsum_ok = field(pf, "headsum_ok").get<bool>();
  report.prefilter.dimension_ok = field(pf, "dimension_ok").get<bool>();
  report.prefilter.verdict = enum_from_string(
      field(pf, "verdict").get<std::string>(),
      {PrefilterVerdict::CatalysisImpossible, PrefilterVerdict::NotExcluded});
  report.prefilter.note = field(pf, "note").get<std::string>();
  report.prefilter.order = enum_from_string(
      field(doc, "order").get<std::string>(),
      {MajorizationOrder::FirstMajorizedBySecond, MajorizationOrder::SecondMajorizedByFirst,
       MajorizationOrder::Equal, MajorizationOrder::Incomparable});

  const auto& ent = field(doc, "entanglement_bounds");
  report.entanglement.max_step_ratio = extended_from_json(field(ent, "a"));
  report.entanglement.min_span_ratio = extended_from_json(field(ent, "b"));
  report.entanglement.m = field(ent, "m").get<std::size_t>();
  report.entanglement.n = field(ent, "n").get<std::size_t>();
  report.entanglement.violations.indices = field(ent, "violation_set").get<std::vector<std::size_t>>();
  report.entanglement.violations.m = report.entanglement.m;
  report.entanglement.violations.n = report.entanglement.n;
  report.plateau_excludes = field(doc, "plateau_excludes").get<bool>();

  const auto& win = field(doc, "qubit_window");
  report.window.lo = rational_from_json(field(win, "lo"));
  report.window.hi = rational_from_json(field(win, "hi"));
  report.window.empty = field(win, "empty").get<bool>();

  const auto& dim = field(doc, "dimension_bound");
  report.dimension.catalyst_possible = field(dim, "catalyst_possible").get<bool>();
  report.dimension.value = double_from_json(field(dim, "value"));
  report.dimension.k_min = field(dim, "k_min").is_null() ? 0 : field(dim, "k_min").get<std::size_t>();

  const auto& sb = field(doc, "sanders");
  report.sanders.d = field(sb, "d").get<std::size_t>();
  report.sanders.dim_applicable = field(sb, "dim_applicable").get<bool>();
  report.sanders.dim_bound = field(sb, "dim_bound").is_null() ? 0.0 : field(sb, "dim_bound").get<double>();
  report.sanders.dim_trivial = field(sb, "dim_trivial").get<bool>();
  report.sanders.ratio_applicable = field(sb, "ratio_applicable").get<bool>();
  if (!field(sb, "ratio_bound").is_null()) report.sanders.ratio_bound = rational_from_json(field(sb, "ratio_bound"));
  report.sanders.ratio_trivial = field(sb, "ratio_trivial").get<bool>();
  report.sanders.note = field(sb, "note").get<std::string>();
  if (sb.contains("candidate_ratio")) {
    report.sanders.candidate_ratio = rational_from_json(sb.at("candidate_ratio"));
    if (!field(sb, "candidate_satisfies").is_null()) {
      report.sanders.candidate_satisfies = sb.at("candidate_satisfies").get<bool>();
    }
  }
  report.reverse_violations = violations_from_json(field(doc, "reverse_violation_set"));

  if (doc.contains("candidate")) {
    const auto& cand = doc.at("candidate");
    report.candidate = vector_from_strings(field(cand, "r"));
    report.candidate_verdict = enum_from_string(
        field(cand, "verdict").get<std::string>(),
        {CandidateVerdict::NotExcluded, CandidateVerdict::ExcludedByPrefilter,
         CandidateVerdict::ExcludedByStepRatio, CandidateVerdict::ExcludedBySpanRatio});
    report.candidate_is_catalyst = field(cand, "is_catalyst").get<bool>();
  }
  return report;
}

bool same_report(const BoundsReport& a, const BoundsReport& b) {
  const auto& pa = a.prefilter;
  const auto& pb = b.prefilter;
  const auto& sa = a.sanders;
  const auto& sb = b.sanders;
  return a.p == b.p && a.q == b.q && pa.p1_le_q1 == pb.p1_le_q1 && pa.pd_ge_qd == pb.pd_ge_qd &&
         pa.headsum_ok == pb.headsum_ok && pa.dimension_ok == pb.dimension_ok &&
         pa.order == pb.order && pa.verdict == pb.verdict && pa.note == pb.note &&
         a.entanglement.max_step_ratio == b.entanglement.max_step_ratio &&
         a.entanglement.min_span_ratio == b.entanglement.min_span_ratio &&
         a.entanglement.m == b.entanglement.m && a.entanglement.n == b.entanglement.n &&
         a.entanglement.violations == b.entanglement.violations &&
         a.plateau_excludes == b.plateau_excludes && a.window.lo == b.window.lo &&
         a.window.hi == b.window.hi && a.window.empty == b.window.empty &&
         a.dimension.catalyst_possible == b.dimension.catalyst_possible &&
         a.dimension.k_min == b.dimension.k_min &&
         same_double(a.dimension.value, b.dimension.value) && sa.d == sb.d &&
         sa.dim_applicable == sb.dim_applicable && same_double(sa.dim_bound, sb.dim_bound) &&
         sa.dim_trivial == sb.dim_trivial && sa.ratio_applicable == sb.ratio_applicable &&
         sa.ratio_bound == sb.ratio_bound && sa.ratio_trivial == sb.ratio_trivial &&
         sa.note == sb.note && sa.candidate_ratio == sb.candidate_ratio &&
         sa.candidate_satisfies == sb.candidate_satisfies &&
         a.reverse_violations == b.reverse_violations && a.candidate == b.candidate &&
         a.candidate_verdict == b.candidate_verdict &&
         a.candidate_is_catalyst == b.candidate_is_catalyst;
}

Json check_document(const ProblemFile& problem) {
  const auto& p = problem.p;
  const auto& q = problem.q;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "check";
  doc["p"] = vector_json(p);
  doc["q"] = vector_json(q);
  doc["order"] = to_string(compare(p, q));
  doc["violation_set"] = violations_json(violation_set(p, q));
  doc["reverse_violation_set"] = violations_json(violation_set(q, p));
  doc["delta"] = rational_json(majorization_distance(p, q));
  doc["pmax"] = rational_json(pmax(p, q));
  if (problem.r) {
    const auto& r = *problem.r;
    Json cat;
    cat["r"] = vector_json(r);
    cat["is_catalyst"] = is_catalyst(p, q, r);
    cat["delta"] = rational_json(delta_catalyzed(p, q, r));
    cat["pmax"] = rational_json(pmax_catalyzed(p, q, r));
    cat["verdict"] = to_string(check_candidate(p, q, r));
    doc["catalyst"] = cat;
  }
  return doc;
}

Json scan_document(const ProblemFile& problem, const ScanOptions& options) {
  require_incomparable(problem.p, problem.q);
  const auto report = scan_qubit_regions(problem.p, problem.q, options);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "scan";
  doc["p"] = vector_json(problem.p);
  doc["q"] = vector_json(problem.q);
  doc["scan_resolution"] = report.scan_resolution;
  doc["refine_precision"] = rational_json(report.refine_precision);
  doc["qubit_window"] = window_json(qubit_window(problem.p, problem.q));
  doc["region_count"] = report.regions.size();
  auto regions = Json::array();
  for (const auto& region : report.regions) {
    Json r;
    r["lo"] = rational_json(region.lo);
    r["hi"] = rational_json(region.hi);
    r["lo_outer"] = rational_json(region.lo_outer);
    r["hi_outer"] = rational_json(region.hi_outer);
    r["lo_refined"] = region.lo_refined;
    r["hi_refined"] = region.hi_refined;
    regions.push_back(std::move(r));
  }
  doc["regions"] = std::move(regions);
  return doc;
}

Json search_document(const ProblemFile& problem, std::size_t k, std::size_t resolution,
                     const SearchOptions& options) {
  const auto result = grid_search(problem.p, problem.q, k, resolution, options);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "search";
  doc["p"] = vector_json(problem.p);
  doc["q"] = vector_json(problem.q);
  doc["k"] = result.k;
  doc["resolution"] = result.resolution;
  doc["limit"] = options.limit;
  doc["candidates"] = result.candidates;
  doc["exhausted"] = result.exhausted;
  doc["count"] = result.catalysts_found.size();
  auto catalysts = Json::array();
  for (const auto& r : result.catalysts_found) {
    auto entries = Json::array();
    for (const auto& x : r) entries.push_back(x.to_fraction());
    catalysts.push_back(std::move(entries));
  }
  doc["catalysts"] = std::move(catalysts);
  return doc;
}

std::string curve_csv(const TransformCurve& curve) {
  std::ostringstream out;
  out << "t,pmax,delta,catalytic\n";
  for (const auto& s : curve.samples) {
    out << s.t.to_decimal(kCsvSignificantDigits) << ',' << s.pmax.to_decimal(kCsvSignificantDigits)
        << ',' << s.delta.to_decimal(kCsvSignificantDigits) << ',' << (s.is_catalytic ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace catalyxis
