#include "catalyxis/catalyxis.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "catalyxis/bounds.hpp"
#include "catalyxis/error.hpp"
#include "catalyxis/metrics.hpp"
#include "catalyxis/problem_io.hpp"
#include "catalyxis/reports.hpp"

struct cx_vec {
  catalyxis::ProbVec value;
};

struct cx_problem {
  catalyxis::ProblemFile value;
};

namespace {

using catalyxis::Error;
using catalyxis::ErrorCode;

thread_local std::string last_error;

cx_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CX_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CX_ERR_PARSE;
    case ErrorCode::NegativeEntry: return CX_ERR_NEGATIVE_ENTRY;
    case ErrorCode::SumNotOne: return CX_ERR_SUM_NOT_ONE;
    case ErrorCode::NotIncomparable: return CX_ERR_NOT_INCOMPARABLE;
    case ErrorCode::IndexOutOfRange: return CX_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::ZeroDenominator: return CX_ERR_ZERO_DENOMINATOR;
    case ErrorCode::ResourceLimit: return CX_ERR_RESOURCE_LIMIT;
    case ErrorCode::Io: return CX_ERR_IO;
  }
  return CX_ERR_INTERNAL;
}

template <typename Fn>
cx_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return CX_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return CX_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CX_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, std::string("null argument: ") + what);
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const catalyxis::Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* cx_version(void) { return "0.1.0"; }

const char* cx_status_name(cx_status status) {
  switch (status) {
    case CX_OK: return "ok";
    case CX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CX_ERR_PARSE: return "parse error";
    case CX_ERR_NEGATIVE_ENTRY: return "negative entry";
    case CX_ERR_SUM_NOT_ONE: return "sum not one";
    case CX_ERR_NOT_INCOMPARABLE: return "pair not incomparable";
    case CX_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case CX_ERR_ZERO_DENOMINATOR: return "zero denominator";
    case CX_ERR_RESOURCE_LIMIT: return "resource limit";
    case CX_ERR_IO: return "i/o error";
    case CX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cx_last_error(void) { return last_error.c_str(); }

void cx_string_free(char* s) { std::free(s); }

cx_status cx_vec_create(const char* const* entries, size_t count, cx_vec** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    require(entries != nullptr || count == 0, "entries");
    std::vector<std::string> raw;
    raw.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(entries[i] != nullptr, "entry");
      raw.emplace_back(entries[i]);
    }
    *out = new cx_vec{catalyxis::ProbVec::parse(raw)};
  });
}

void cx_vec_free(cx_vec* v) { delete v; }

size_t cx_vec_size(const cx_vec* v) { return v ? v->value.size() : 0; }

cx_status cx_vec_entry(const cx_vec* v, size_t index, char** out) {
  return guarded([&] {
    require(v && out, "vector/out");
    if (index >= v->value.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "entry " + std::to_string(index) + " out of range");
    }
    *out = duplicate(v->value[index].to_string());
  });
}

cx_status cx_tensor(const cx_vec* p, const cx_vec* r, cx_vec** out) {
  return guarded([&] {
    require(p && r && out, "vector/out");
    *out = new cx_vec{catalyxis::tensor(p->value, r->value)};
  });
}

cx_status cx_compare(const cx_vec* p, const cx_vec* q, cx_order* out) {
  return guarded([&] {
    require(p && q && out, "vector/out");
    switch (catalyxis::compare(p->value, q->value)) {
      case catalyxis::MajorizationOrder::FirstMajorizedBySecond: *out = CX_FIRST_MAJORIZED_BY_SECOND; break;
      case catalyxis::MajorizationOrder::SecondMajorizedByFirst: *out = CX_SECOND_MAJORIZED_BY_FIRST; break;
      case catalyxis::MajorizationOrder::Equal: *out = CX_EQUAL; break;
      case catalyxis::MajorizationOrder::Incomparable: *out = CX_INCOMPARABLE; break;
    }
  });
}

cx_status cx_violation_set(const cx_vec* p, const cx_vec* q, size_t* indices, size_t capacity,
                           size_t* count) {
  return guarded([&] {
    require(p && q && count, "vector/count");
    const auto set = catalyxis::violation_set(p->value, q->value);
    *count = set.indices.size();
    if (indices == nullptr) return;
    if (capacity < set.indices.size()) {
      throw Error(ErrorCode::InvalidArgument, "index buffer too small; need " + std::to_string(set.indices.size()));
    }
    std::copy(set.indices.begin(), set.indices.end(), indices);
  });
}

cx_status cx_majorization_distance(const cx_vec* p, const cx_vec* q, char** out) {
  return guarded([&] {
    require(p && q && out, "vector/out");
    *out = duplicate(catalyxis::majorization_distance(p->value, q->value).to_fraction());
  });
}

cx_status cx_pmax(const cx_vec* p, const cx_vec* q, char** out) {
  return guarded([&] {
    require(p && q && out, "vector/out");
    *out = duplicate(catalyxis::pmax(p->value, q->value).to_fraction());
  });
}

cx_status cx_is_catalyst(const cx_vec* p, const cx_vec* q, const cx_vec* r, int* out) {
  return guarded([&] {
    require(p && q && r && out, "vector/out");
    *out = catalyxis::is_catalyst(p->value, q->value, r->value) ? 1 : 0;
  });
}

cx_status cx_pmax_catalyzed(const cx_vec* p, const cx_vec* q, const cx_vec* r, char** out) {
  return guarded([&] {
    require(p && q && r && out, "vector/out");
    *out = duplicate(catalyxis::pmax_catalyzed(p->value, q->value, r->value).to_fraction());
  });
}

cx_status cx_delta_catalyzed(const cx_vec* p, const cx_vec* q, const cx_vec* r, char** out) {
  return guarded([&] {
    require(p && q && r && out, "vector/out");
    *out = duplicate(catalyxis::delta_catalyzed(p->value, q->value, r->value).to_fraction());
  });
}

cx_status cx_check_candidate(const cx_vec* p, const cx_vec* q, const cx_vec* r,
                             cx_candidate_verdict* out) {
  return guarded([&] {
    require(p && q && r && out, "vector/out");
    switch (catalyxis::check_candidate(p->value, q->value, r->value)) {
      case catalyxis::CandidateVerdict::NotExcluded: *out = CX_NOT_EXCLUDED; break;
      case catalyxis::CandidateVerdict::ExcludedByPrefilter: *out = CX_EXCLUDED_BY_PREFILTER; break;
      case catalyxis::CandidateVerdict::ExcludedByStepRatio: *out = CX_EXCLUDED_BY_STEP_RATIO; break;
      case catalyxis::CandidateVerdict::ExcludedBySpanRatio: *out = CX_EXCLUDED_BY_SPAN_RATIO; break;
    }
  });
}

cx_status cx_entanglement_bounds(const cx_vec* p, const cx_vec* q, char** a, char** b, size_t* m,
                                 size_t* n) {
  return guarded([&] {
    require(p && q && a && b && m && n, "vector/out");
    const auto bounds = catalyxis::entanglement_bounds(p->value, q->value);
    std::string a_text = bounds.max_step_ratio.to_string();
    std::string b_text = bounds.min_span_ratio.to_string();
    *a = duplicate(a_text);
    *b = duplicate(b_text);
    *m = bounds.m;
    *n = bounds.n;
  });
}

cx_status cx_qubit_window(const cx_vec* p, const cx_vec* q, char** lo, char** hi, int* empty) {
  return guarded([&] {
    require(p && q && lo && hi && empty, "vector/out");
    const auto window = catalyxis::qubit_window(p->value, q->value);
    *lo = duplicate(window.lo.to_fraction());
    *hi = duplicate(window.hi.to_fraction());
    *empty = window.empty ? 1 : 0;
  });
}

cx_status cx_dimension_lower_bound(const cx_vec* p, const cx_vec* q, int* possible, size_t* k_min,
                                   double* value) {
  return guarded([&] {
    require(p && q && possible && k_min && value, "vector/out");
    const auto bound = catalyxis::dimension_lower_bound(p->value, q->value);
    *possible = bound.catalyst_possible ? 1 : 0;
    *k_min = bound.k_min;
    *value = bound.value;
  });
}

cx_status cx_problem_parse(const char* text, cx_problem** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new cx_problem{catalyxis::parse_problem(text)};
  });
}

cx_status cx_problem_load(const char* path, cx_problem** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = new cx_problem{catalyxis::load_problem(path)};
  });
}

void cx_problem_free(cx_problem* problem) { delete problem; }

cx_status cx_problem_vectors(const cx_problem* problem, cx_vec** p, cx_vec** q, cx_vec** r) {
  return guarded([&] {
    require(problem && p && q && r, "problem/out");
    *p = new cx_vec{problem->value.p};
    *q = new cx_vec{problem->value.q};
    *r = problem->value.r ? new cx_vec{*problem->value.r} : nullptr;
  });
}

cx_status cx_problem_json(const cx_problem* problem, char** out) {
  return guarded([&] {
    require(problem && out, "problem/out");
    *out = duplicate(dump(catalyxis::to_json(problem->value)));
  });
}

cx_status cx_report_check(const cx_problem* problem, char** out) {
  return guarded([&] {
    require(problem && out, "problem/out");
    *out = duplicate(dump(catalyxis::check_document(problem->value)));
  });
}

cx_status cx_report_bounds(const cx_problem* problem, char** out) {
  return guarded([&] {
    require(problem && out, "problem/out");
    *out = duplicate(dump(catalyxis::to_json(catalyxis::build_bounds_report(problem->value))));
  });
}

cx_status cx_report_curve_csv(const cx_problem* problem, size_t samples, char** out) {
  return guarded([&] {
    require(problem && out, "problem/out");
    *out = duplicate(catalyxis::curve_csv(catalyxis::curve(problem->value.p, problem->value.q, samples)));
  });
}

cx_status cx_report_scan(const cx_problem* problem, size_t resolution, const char* precision,
                         char** out) {
  return guarded([&] {
    require(problem && precision && out, "problem/precision/out");
    catalyxis::ScanOptions options;
    options.resolution = resolution;
    options.refine_precision = catalyxis::Rational::parse(precision);
    *out = duplicate(dump(catalyxis::scan_document(problem->value, options)));
  });
}

cx_status cx_report_search(const cx_problem* problem, size_t k, size_t resolution, uint64_t limit,
                           char** out) {
  return guarded([&] {
    require(problem && out, "problem/out");
    catalyxis::SearchOptions options;
    if (limit != 0) options.limit = limit;
    *out = duplicate(dump(catalyxis::search_document(problem->value, k, resolution, options)));
  });
}

uint64_t cx_default_search_limit(void) { return catalyxis::SearchOptions{}.limit; }

}  // extern "C"
