#include <gtest/gtest.h>

#include <cstdint>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "catalyxis/catalyxis.h"

extern "C" int c_header_order_of(const char* const* p, const char* const* q, size_t d);

namespace {

struct VecDeleter {
  void operator()(cx_vec* v) const { cx_vec_free(v); }
};
struct ProblemDeleter {
  void operator()(cx_problem* p) const { cx_problem_free(p); }
};
using Vec = std::unique_ptr<cx_vec, VecDeleter>;
using Problem = std::unique_ptr<cx_problem, ProblemDeleter>;

Vec make(std::vector<const char*> entries) {
  cx_vec* out = nullptr;
  EXPECT_EQ(cx_vec_create(entries.data(), entries.size(), &out), CX_OK) << cx_last_error();
  return Vec(out);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cx_string_free(s);
  return out;
}

const std::string kData = CATALYXIS_DATA_DIR;

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(cx_version(), "0.1.0");
  EXPECT_STREQ(cx_status_name(CX_OK), "ok");
  EXPECT_STREQ(cx_status_name(CX_ERR_SUM_NOT_ONE), "sum not one");
  EXPECT_STREQ(cx_status_name(static_cast<cx_status>(99)), "unknown status");
  EXPECT_EQ(cx_default_search_limit(), 100'000'000u);
}

TEST(CApi, VectorLifecycleAndErrors) {
  const auto p = make({"0.35", "0.45", "0.12", "0.08"});
  EXPECT_EQ(cx_vec_size(p.get()), 4u);
  char* entry = nullptr;
  ASSERT_EQ(cx_vec_entry(p.get(), 0, &entry), CX_OK);
  EXPECT_EQ(take(entry), "0.45");
  EXPECT_EQ(cx_vec_entry(p.get(), 4, &entry), CX_ERR_INDEX_OUT_OF_RANGE);

  cx_vec* bad = nullptr;
  const char* sum[] = {"0.5", "0.4"};
  EXPECT_EQ(cx_vec_create(sum, 2, &bad), CX_ERR_SUM_NOT_ONE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(cx_last_error()).find("sum"), std::string::npos);
  const char* neg[] = {"1.5", "-0.5"};
  EXPECT_EQ(cx_vec_create(neg, 2, &bad), CX_ERR_NEGATIVE_ENTRY);
  const char* junk[] = {"abc"};
  EXPECT_EQ(cx_vec_create(junk, 1, &bad), CX_ERR_PARSE);
  EXPECT_EQ(cx_vec_create(nullptr, 1, &bad), CX_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cx_vec_create(sum, 2, nullptr), CX_ERR_INVALID_ARGUMENT);
  cx_vec_free(nullptr);
  cx_string_free(nullptr);
}

TEST(CApi, MajorizationQueries) {
  const auto p = make({"0.45", "0.35", "0.12", "0.08"});
  const auto q = make({"0.56", "0.21", "0.17", "0.06"});
  cx_order order{};
  ASSERT_EQ(cx_compare(p.get(), q.get(), &order), CX_OK);
  EXPECT_EQ(order, CX_INCOMPARABLE);

  size_t count = 0;
  ASSERT_EQ(cx_violation_set(p.get(), q.get(), nullptr, 0, &count), CX_OK);
  EXPECT_EQ(count, 1u);
  size_t indices[4] = {};
  ASSERT_EQ(cx_violation_set(p.get(), q.get(), indices, 4, &count), CX_OK);
  EXPECT_EQ(indices[0], 2u);
  EXPECT_EQ(cx_violation_set(p.get(), q.get(), indices, 0, &count), CX_ERR_INVALID_ARGUMENT);

  char* s = nullptr;
  ASSERT_EQ(cx_majorization_distance(p.get(), q.get(), &s), CX_OK);
  EXPECT_EQ(take(s), "3/50");
  ASSERT_EQ(cx_pmax(p.get(), q.get(), &s), CX_OK);
  EXPECT_EQ(take(s), "20/23");

  const auto r = make({"0.6", "0.4"});
  cx_vec* t = nullptr;
  ASSERT_EQ(cx_tensor(p.get(), r.get(), &t), CX_OK);
  EXPECT_EQ(cx_vec_size(t), 8u);
  cx_vec_free(t);
}

TEST(CApi, CatalysisQueries) {
  const auto p = make({"0.45", "0.35", "0.12", "0.08"});
  const auto q = make({"0.56", "0.21", "0.17", "0.06"});
  const auto r = make({"0.7", "0.3"});
  int yes = -1;
  ASSERT_EQ(cx_is_catalyst(p.get(), q.get(), r.get(), &yes), CX_OK);
  EXPECT_EQ(yes, 1);
  char* s = nullptr;
  ASSERT_EQ(cx_pmax_catalyzed(p.get(), q.get(), r.get(), &s), CX_OK);
  EXPECT_EQ(take(s), "1");
  ASSERT_EQ(cx_delta_catalyzed(p.get(), q.get(), r.get(), &s), CX_OK);
  EXPECT_EQ(take(s), "0");
  cx_candidate_verdict verdict{};
  ASSERT_EQ(cx_check_candidate(p.get(), q.get(), r.get(), &verdict), CX_OK);
  EXPECT_EQ(verdict, CX_NOT_EXCLUDED);
  const auto uniform = make({"1/2", "1/2"});
  ASSERT_EQ(cx_check_candidate(p.get(), q.get(), uniform.get(), &verdict), CX_OK);
  EXPECT_EQ(verdict, CX_EXCLUDED_BY_SPAN_RATIO);

  char* a = nullptr;
  char* b = nullptr;
  size_t m = 0, n = 0;
  ASSERT_EQ(cx_entanglement_bounds(p.get(), q.get(), &a, &b, &m, &n), CX_OK);
  EXPECT_EQ(take(a), "8/3");
  EXPECT_EQ(take(b), "21/17");
  EXPECT_EQ(m, 2u);
  EXPECT_EQ(n, 2u);

  char* lo = nullptr;
  char* hi = nullptr;
  int empty = -1;
  ASSERT_EQ(cx_qubit_window(p.get(), q.get(), &lo, &hi, &empty), CX_OK);
  EXPECT_EQ(take(lo), "3/11");
  EXPECT_EQ(take(hi), "17/38");
  EXPECT_EQ(empty, 0);

  int possible = -1;
  size_t k_min = 0;
  double value = 0;
  ASSERT_EQ(cx_dimension_lower_bound(p.get(), q.get(), &possible, &k_min, &value), CX_OK);
  EXPECT_EQ(possible, 1);
  EXPECT_EQ(k_min, 2u);

  EXPECT_EQ(cx_entanglement_bounds(q.get(), q.get(), &a, &b, &m, &n), CX_ERR_NOT_INCOMPARABLE);
  EXPECT_EQ(cx_is_catalyst(p.get(), nullptr, r.get(), &yes), CX_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ProblemsAndReports) {
  cx_problem* raw = nullptr;
  ASSERT_EQ(cx_problem_load((kData + "/no_qubit_catalyst.json").c_str(), &raw), CX_OK) << cx_last_error();
  const Problem problem(raw);

  char* doc = nullptr;
  ASSERT_EQ(cx_report_bounds(problem.get(), &doc), CX_OK);
  const std::string bounds = take(doc);
  EXPECT_NE(bounds.find("\"53/31\""), std::string::npos);
  EXPECT_EQ(bounds.back(), '\n');

  ASSERT_EQ(cx_report_search(problem.get(), 2, 100, 0, &doc), CX_OK);
  const std::string search = take(doc);
  EXPECT_NE(search.find("\"exhausted\": true"), std::string::npos);
  EXPECT_NE(search.find("\"count\": 0"), std::string::npos);
  EXPECT_EQ(cx_report_search(problem.get(), 3, 100, 10, &doc), CX_ERR_RESOURCE_LIMIT);

  ASSERT_EQ(cx_report_scan(problem.get(), 100, "1e-6", &doc), CX_OK);
  EXPECT_NE(take(doc).find("\"region_count\": 0"), std::string::npos);
  EXPECT_EQ(cx_report_scan(problem.get(), 100, "abc", &doc), CX_ERR_PARSE);

  ASSERT_EQ(cx_report_curve_csv(problem.get(), 3, &doc), CX_OK);
  EXPECT_EQ(take(doc).rfind("t,pmax,delta,catalytic\n", 0), 0u);

  cx_vec* p = nullptr;
  cx_vec* q = nullptr;
  cx_vec* r = reinterpret_cast<cx_vec*>(1);
  ASSERT_EQ(cx_problem_vectors(problem.get(), &p, &q, &r), CX_OK);
  EXPECT_EQ(r, nullptr);
  EXPECT_EQ(cx_vec_size(p), 4u);
  cx_vec_free(p);
  cx_vec_free(q);

  ASSERT_EQ(cx_problem_json(problem.get(), &doc), CX_OK);
  cx_problem* again = nullptr;
  ASSERT_EQ(cx_problem_parse(take(doc).c_str(), &again), CX_OK);
  cx_problem_free(again);

  EXPECT_EQ(cx_problem_load((kData + "/missing.json").c_str(), &raw), CX_ERR_IO);
  EXPECT_EQ(cx_problem_parse("{\"p\": [\"1\"]}", &raw), CX_ERR_PARSE);
  cx_problem* comparable = nullptr;
  ASSERT_EQ(cx_problem_parse("p,0.5,0.5\nq,1,0\n", &comparable), CX_OK);
  EXPECT_EQ(cx_report_bounds(comparable, &doc), CX_ERR_NOT_INCOMPARABLE);
  ASSERT_EQ(cx_report_check(comparable, &doc), CX_OK);
  EXPECT_NE(take(doc).find("FirstMajorizedBySecond"), std::string::npos);
  cx_problem_free(comparable);
}

TEST(CApi, LastErrorIsPerThread) {
  const char* sum[] = {"0.5", "0.4"};
  cx_vec* bad = nullptr;
  ASSERT_EQ(cx_vec_create(sum, 2, &bad), CX_ERR_SUM_NOT_ONE);
  std::string other;
  std::thread([&] {
    const char* junk[] = {"x"};
    cx_vec* v = nullptr;
    (void)cx_vec_create(junk, 1, &v);
    other = cx_last_error();
  }).join();
  EXPECT_NE(std::string(cx_last_error()).find("sum"), std::string::npos);
  EXPECT_NE(other, cx_last_error());
}

TEST(CApi, HeaderCompilesAsC) {
  const char* p[] = {"0.45", "0.35", "0.12", "0.08"};
  const char* q[] = {"0.56", "0.21", "0.17", "0.06"};
  EXPECT_EQ(c_header_order_of(p, q, 4), CX_INCOMPARABLE);
  EXPECT_EQ(c_header_order_of(p, p, 4), CX_EQUAL);
}

}  // namespace
