#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catalyxis/bounds.hpp"
#include "catalyxis/error.hpp"
#include "catalyxis/metrics.hpp"
#include "catalyxis/search.hpp"
#include "support/generators.hpp"

namespace catalyxis {
namespace {

ProbVec vec(std::vector<std::string> entries) { return ProbVec::parse(entries); }

const ProbVec kP4 = vec({"0.45", "0.35", "0.12", "0.08"});
const ProbVec kQ4 = vec({"0.56", "0.21", "0.17", "0.06"});
const ProbVec kP5 = vec({"0.49", "0.30", "0.13", "0.06", "0.02"});
const ProbVec kQ5 = vec({"0.56", "0.25", "0.10", "0.08", "0.01"});
const ProbVec kPHigh = vec({"0.47", "0.38", "0.13", "0.02"});
const ProbVec kQHigh = vec({"0.53", "0.31", "0.15", "0.01"});
const ProbVec kP3 = vec({"0.5", "0.4", "0.1"});
const ProbVec kQ3 = vec({"0.6", "0.2", "0.2"});

bool contains(const Region& region, const Rational& t) { return region.lo <= t && t <= region.hi; }

void expect_brackets_valid(const ProbVec& p, const ProbVec& q, const RegionReport& report) {
  for (const auto& region : report.regions) {
    ASSERT_LE(region.lo, region.hi);
    ASSERT_TRUE(is_catalyst(p, q, ProbVec::qubit(region.lo)));
    ASSERT_TRUE(is_catalyst(p, q, ProbVec::qubit(region.hi)));
    if (region.lo_refined) {
      ASSERT_LT(region.lo_outer, region.lo);
      ASSERT_LT(region.lo - region.lo_outer, report.refine_precision);
      ASSERT_FALSE(is_catalyst(p, q, ProbVec::qubit(region.lo_outer)));
    } else {
      ASSERT_EQ(region.lo_outer, region.lo);
    }
    if (region.hi_refined) {
      ASSERT_GT(region.hi_outer, region.hi);
      ASSERT_LT(region.hi_outer - region.hi, report.refine_precision);
      ASSERT_FALSE(is_catalyst(p, q, ProbVec::qubit(region.hi_outer)));
    } else {
      ASSERT_EQ(region.hi_outer, region.hi);
    }
  }
  for (std::size_t i = 1; i < report.regions.size(); ++i) {
    ASSERT_LT(report.regions[i - 1].hi_outer, report.regions[i].lo_outer);
  }
}

TEST(Scan, TwoRegions) {
  const auto report = scan_qubit_regions(kP5, kQ5);
  EXPECT_EQ(report.scan_resolution, 1000u);
  EXPECT_EQ(report.refine_precision, Rational(1, 1'000'000'000));
  ASSERT_EQ(report.regions.size(), 2u);
  EXPECT_TRUE(contains(report.regions[0], Rational(1, 5)));
  EXPECT_TRUE(contains(report.regions[1], Rational(7, 20)));
  EXPECT_LT(report.regions[0].hi, Rational(3, 10));
  EXPECT_GT(report.regions[1].lo, Rational(3, 10));
  expect_brackets_valid(kP5, kQ5, report);
}

TEST(Scan, SingleRegionInsideWindow) {
  const auto report = scan_qubit_regions(kP4, kQ4);
  ASSERT_EQ(report.regions.size(), 1u);
  const auto w = qubit_window(kP4, kQ4);
  EXPECT_GT(report.regions[0].lo_outer, w.lo);
  EXPECT_LT(report.regions[0].hi_outer, w.hi);
  EXPECT_TRUE(report.regions[0].lo_refined);
  EXPECT_TRUE(report.regions[0].hi_refined);
  expect_brackets_valid(kP4, kQ4, report);
}

TEST(Scan, EmptyWhenNoQubitCatalyst) {
  EXPECT_TRUE(scan_qubit_regions(kP3, kQ3).regions.empty());
  EXPECT_TRUE(scan_qubit_regions(kPHigh, kQHigh).regions.empty());
}

TEST(Scan, ComparablePairCoversWholeRange) {
  const auto report = scan_qubit_regions(ProbVec::uniform(4), kQ4, {.resolution = 10});
  ASSERT_EQ(report.regions.size(), 1u);
  EXPECT_EQ(report.regions[0].lo, Rational(0));
  EXPECT_EQ(report.regions[0].hi, Rational(1, 2));
  EXPECT_FALSE(report.regions[0].lo_refined);
  EXPECT_FALSE(report.regions[0].hi_refined);
}

TEST(Scan, RejectsBadOptions) {
  EXPECT_THROW((void)scan_qubit_regions(kP4, kQ4, {.resolution = 9}), Error);
  EXPECT_THROW((void)scan_qubit_regions(kP4, kQ4, {.resolution = 100, .refine_precision = Rational(0)}), Error);
}

TEST(GridSearch, Examples) {
  const auto high = grid_search(kPHigh, kQHigh, 2, 100);
  EXPECT_TRUE(high.catalysts_found.empty());
  EXPECT_TRUE(high.exhausted);
  EXPECT_EQ(high.candidates, 51u);

  const auto two = grid_search(kP5, kQ5, 2, 20);
  EXPECT_TRUE(two.exhausted);
  const std::vector<ProbVec> expected{vec({"0.8", "0.2"}), vec({"0.65", "0.35"})};
  EXPECT_EQ(two.catalysts_found, expected);

  for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(grid_search(kP3, kQ3, k, 30).catalysts_found.empty());
}

TEST(GridSearch, ThreeDimensionalCatalystForHigherDimensionalPair) {
  const auto found = grid_search(kPHigh, kQHigh, 3, 200);
  ASSERT_EQ(found.catalysts_found.size(), 1u);
  EXPECT_EQ(found.catalysts_found[0], ProbVec::make({Rational(1, 2), Rational(61, 200), Rational(39, 200)}));
}

TEST(GridSearch, ThreadCountDoesNotChangeResult) {
  const auto serial = grid_search(kP5, kQ5, 3, 40, {.threads = 1});
  const auto parallel = grid_search(kP5, kQ5, 3, 40, {.threads = 3});
  EXPECT_EQ(serial.catalysts_found, parallel.catalysts_found);
  EXPECT_EQ(serial.candidates, parallel.candidates);
  EXPECT_FALSE(serial.catalysts_found.empty());
}

TEST(GridSearch, MaxResultsStopsEarly) {
  const auto capped = grid_search(kP5, kQ5, 3, 40, {.threads = 1, .max_results = 1});
  ASSERT_EQ(capped.catalysts_found.size(), 1u);
  EXPECT_FALSE(capped.exhausted);
  const auto full = grid_search(kP5, kQ5, 3, 40, {.threads = 1});
  EXPECT_EQ(capped.catalysts_found[0], full.catalysts_found[0]);
}

TEST(GridSearch, ResourceLimit) {
  try {
    (void)grid_search(kP4, kQ4, 3, 100, {.limit = 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
  EXPECT_NO_THROW((void)grid_search(kP4, kQ4, 2, 100, {.limit = 51}));
}

TEST(GridSearch, RejectsBadArguments) {
  EXPECT_THROW((void)grid_search(kP4, kQ4, 0, 10), Error);
  EXPECT_THROW((void)grid_search(kP4, kQ4, 5, 4), Error);
}

TEST(GridSearch, CompositionCount) {
  EXPECT_EQ(count_sorted_compositions(5, 2), 3u);
  EXPECT_EQ(count_sorted_compositions(10, 3), 14u);
  EXPECT_EQ(count_sorted_compositions(100, 2), 51u);
  EXPECT_EQ(count_sorted_compositions(100, 100), 190569292u);  // p(100)
  EXPECT_EQ(count_sorted_compositions(0, 3), 1u);
  EXPECT_EQ(count_sorted_compositions(3000, 3000), UINT64_MAX);
  // Brute force over unsorted compositions, deduplicated after sorting.
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) {
        std::vector<std::size_t> parts{a, b, n - a - b};
        std::sort(parts.begin(), parts.end());
        seen.insert(parts);
      }
    }
    EXPECT_EQ(count_sorted_compositions(n, 3), seen.size()) << n;
    EXPECT_EQ(grid_search(kP4, kQ4, 3, n < 3 ? 3 : n).candidates, count_sorted_compositions(n < 3 ? 3 : n, 3));
  }
}

TEST(EmpiricalMinDimension, Examples) {
  // Coarse grids miss the three-dimensional catalyst; this is reported as absent.
  EXPECT_EQ(empirical_min_dimension(kPHigh, kQHigh, 3, 60), std::nullopt);
  EXPECT_EQ(empirical_min_dimension(kPHigh, kQHigh, 3, 200), std::optional<std::size_t>(3));
  EXPECT_EQ(empirical_min_dimension(kP5, kQ5, 3, 20), std::optional<std::size_t>(2));
  EXPECT_EQ(empirical_min_dimension(kP3, kQ3, 3, 30), std::nullopt);
  EXPECT_THROW((void)empirical_min_dimension(kP3, kQ3, 1, 30), Error);
}

TEST(SearchProperty, RegionEndpointsInsideWindowAndBracketsValid) {
  testing_support::Generator gen(401);
  int with_regions = 0;
  for (int i = 0; i < 150; ++i) {
    const auto [p, q] = gen.plausible_pair(gen.uniform_size(4, 6));
    const auto report = scan_qubit_regions(p, q, {.resolution = 100, .refine_precision = Rational(1, 1'000'000)});
    expect_brackets_valid(p, q, report);
    if (report.regions.empty()) continue;
    ++with_regions;
    const auto w = qubit_window(p, q);
    for (const auto& region : report.regions) {
      ASSERT_LT(w.lo, region.lo);
      ASSERT_LT(region.hi, w.hi);
      ASSERT_GT(region.lo, Rational(0));
      ASSERT_LE(region.hi, Rational(1, 2));
    }
  }
  EXPECT_GT(with_regions, 0);
}

TEST(SearchProperty, DoublingResolutionKeepsRegions) {
  testing_support::Generator gen(402);
  for (int i = 0; i < 100; ++i) {
    const auto [p, q] = gen.plausible_pair(gen.uniform_size(4, 6));
    const std::size_t n = 40;
    const ScanOptions coarse{.resolution = n, .refine_precision = Rational(1, 10'000)};
    const ScanOptions fine{.resolution = 2 * n, .refine_precision = Rational(1, 10'000)};
    const auto a = scan_qubit_regions(p, q, coarse);
    const auto b = scan_qubit_regions(p, q, fine);
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational t(static_cast<long>(j), static_cast<long>(2 * n));
      const bool in_a = std::any_of(a.regions.begin(), a.regions.end(), [&](const Region& r) { return contains(r, t); });
      if (!in_a) continue;
      ASSERT_TRUE(std::any_of(b.regions.begin(), b.regions.end(), [&](const Region& r) { return contains(r, t); }));
    }
    ASSERT_GE(b.regions.size(), a.regions.size() == 0 ? 0u : 1u);
  }
}

// The step-ratio rule holds for qubit catalysts. For k >= 3 only the two
// end ratios are constrained: r_1/r_2 < q_1/q_m and r_{k-1}/r_k < q_{n+1}/q_d.
TEST(GridSearch, StepRatioRuleRejectsSomeThreeDimensionalCatalysts) {
  const auto p = vec({"0.51", "0.26", "0.12", "0.07", "0.04"});
  const auto q = vec({"0.57", "0.18", "0.13", "0.11", "0.01"});
  const auto r = vec({"0.7", "0.25", "0.05"});
  ASSERT_TRUE(is_catalyst(p, q, r));
  const auto b = entanglement_bounds(p, q);
  EXPECT_EQ(b.max_step_ratio, ExtendedRational(Rational(19, 6)));
  EXPECT_EQ(max_consecutive_ratio(r), Rational(5));
  EXPECT_EQ(check_candidate(p, q, r), CandidateVerdict::ExcludedByStepRatio);
  EXPECT_EQ(dimension_lower_bound(b).k_min, 2u);
}

TEST(SearchProperty, FoundCatalystsSatisfyProvableConditions) {
  testing_support::Generator gen(403);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [p, q] = gen.plausible_pair(gen.uniform_size(4, 6));
    const std::size_t k = gen.uniform_size(1, 3);
    const auto result = grid_search(p, q, k, 20);
    ASSERT_TRUE(result.exhausted);
    if (k == 1) ASSERT_TRUE(result.catalysts_found.empty());
    const auto bounds = entanglement_bounds(p, q);
    const auto dim = dimension_lower_bound(bounds);
    const std::size_t m = bounds.m;
    const std::size_t n = bounds.n;
    const std::size_t d = p.size();
    for (const auto& found_r : result.catalysts_found) {
      ++found;
      ASSERT_TRUE(is_catalyst(p, q, found_r));
      const auto r = found_r.without_zeros();
      const std::size_t kr = r.size();
      ASSERT_GE(kr, 2u);
      ASSERT_TRUE(dim.catalyst_possible);
      ASSERT_GE(kr, dim.k_min);
      ASSERT_GT(span_ratio(r), bounds.min_span_ratio.value());
      ASSERT_LT(r[0] * q[m - 1], q[0] * r[1]);
      ASSERT_LT(r[kr - 2] * q[d - 1], q[n] * r[kr - 1]);
      if (kr == 2) ASSERT_EQ(check_candidate(p, q, found_r), CandidateVerdict::NotExcluded);
    }
  }
  EXPECT_GT(found, 0);
}

}  // namespace
}  // namespace catalyxis
