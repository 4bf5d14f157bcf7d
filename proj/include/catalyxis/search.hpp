#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "catalyxis/probvec.hpp"
#include "catalyxis/rational.hpp"

namespace catalyxis {

/// A run of consecutive catalytic scan samples. `lo`/`hi` are the innermost
/// catalytic points found by bisection; `lo_outer`/`hi_outer` the matching
/// non-catalytic bracket ends. An unrefined side sits on the grid edge and
/// has outer == inner.
struct Region {
  Rational lo;
  Rational hi;
  Rational lo_outer;
  Rational hi_outer;
  bool lo_refined = false;
  bool hi_refined = false;
};

struct RegionReport {
  std::vector<Region> regions;
  std::size_t scan_resolution = 0;
  Rational refine_precision;
};

struct ScanOptions {
  std::size_t resolution = 1000;
  Rational refine_precision = Rational(1, 1'000'000'000);
};

/// Samples t = j / (2N), j = 0..N (N = resolution, so doubling N keeps every
/// earlier sample), groups consecutive catalytic samples and bisects each
/// boundary on the exact predicate until the bracket is narrower than the
/// refine precision. Says nothing about t between samples.
RegionReport scan_qubit_regions(const ProbVec& p, const ProbVec& q, const ScanOptions& options = {});

struct SearchOptions {
  /// Upper bound on enumerated candidates; exceeding it throws ResourceLimit.
  std::uint64_t limit = 100'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Stop after this many catalysts (0 = no cap). Stopping early leaves
  /// `exhausted` false.
  std::size_t max_results = 0;
};

struct GridSearchResult {
  std::size_t k = 0;
  std::size_t resolution = 0;
  std::uint64_t candidates = 0;  // grid size
  std::vector<ProbVec> catalysts_found;
  bool exhausted = false;
};

/// Number of sorted k-part compositions of n (partitions of n into at most
/// k parts), saturating at UINT64_MAX.
std::uint64_t count_sorted_compositions(std::size_t n, std::size_t k);

/// Enumerates r = (n_1/N, ..., n_k/N) with n_1 >= ... >= n_k >= 0 summing to
/// N, in lexicographically decreasing order, keeping every exact catalyst.
GridSearchResult grid_search(const ProbVec& p, const ProbVec& q, std::size_t k,
                             std::size_t resolution, const SearchOptions& options = {});

/// Smallest k <= k_max with a nonempty grid search, if any.
std::optional<std::size_t> empirical_min_dimension(const ProbVec& p, const ProbVec& q,
                                                   std::size_t k_max, std::size_t resolution,
                                                   const SearchOptions& options = {});

}  // namespace catalyxis
