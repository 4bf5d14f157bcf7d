#include "catalyxis/search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "catalyxis/error.hpp"
#include "catalyxis/metrics.hpp"

namespace catalyxis {
namespace {

bool catalytic_at(const ProbVec& p, const ProbVec& q, const Rational& t) {
  return is_catalyst(p, q, ProbVec::qubit(t));
}

// Shrinks [catalytic, outside] (in either order) until narrower than
// `precision`, keeping one catalytic and one non-catalytic end.
void bisect(const ProbVec& p, const ProbVec& q, Rational& catalytic, Rational& outside,
            const Rational& precision) {
  while (abs(catalytic - outside) >= precision) {
    Rational mid = (catalytic + outside) / Rational(2);
    if (catalytic_at(p, q, mid)) {
      catalytic = std::move(mid);
    } else {
      outside = std::move(mid);
    }
  }
}

// Calls visit(parts) for every non-increasing sequence of k parts summing to
// n whose first part equals `first`, in lexicographically decreasing order.
// visit returns false to stop.
bool enumerate_with_first(std::size_t n, std::size_t k, std::size_t first,
                          std::vector<std::size_t>& parts,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  parts.assign(k, 0);
  parts[0] = first;
  std::function<bool(std::size_t, std::size_t, std::size_t)> fill =
      [&](std::size_t index, std::size_t remaining, std::size_t cap) -> bool {
    if (index == k) return remaining == 0 ? visit(parts) : true;
    const std::size_t slots = k - index;
    const std::size_t hi = std::min(cap, remaining);
    // The remaining slots can absorb at most slots * part.
    const std::size_t lo = (remaining + slots - 1) / slots;
    for (std::size_t part = hi + 1; part-- > lo;) {
      parts[index] = part;
      if (!fill(index + 1, remaining - part, part)) return false;
    }
    parts[index] = 0;
    return true;
  };
  return fill(1, n - first, first);
}

ProbVec composition_to_vector(const std::vector<std::size_t>& parts, std::size_t n) {
  std::vector<Rational> entries;
  entries.reserve(parts.size());
  for (std::size_t part : parts) {
    entries.emplace_back(static_cast<long>(part), static_cast<long>(n));
  }
  return ProbVec::make(std::move(entries));
}

std::vector<ProbVec> search_first_part(const ProbVec& p, const ProbVec& q, std::size_t n,
                                       std::size_t k, std::size_t first,
                                       std::size_t max_results) {
  std::vector<ProbVec> found;
  std::vector<std::size_t> parts;
  enumerate_with_first(n, k, first, parts, [&](const std::vector<std::size_t>& c) {
    ProbVec r = composition_to_vector(c, n);
    if (is_catalyst(p, q, r)) found.push_back(std::move(r));
    return max_results == 0 || found.size() < max_results;
  });
  return found;
}

}  // namespace

RegionReport scan_qubit_regions(const ProbVec& p, const ProbVec& q, const ScanOptions& options) {
  if (options.resolution < 10) throw Error(ErrorCode::InvalidArgument, "scan resolution must be >= 10");
  if (options.refine_precision.sign() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "refine precision must be positive");
  }
  const std::size_t n = options.resolution;
  const long denominator = 2 * static_cast<long>(n);
  const auto grid = [&](std::size_t j) { return Rational(static_cast<long>(j), denominator); };

  std::vector<bool> catalytic(n + 1);
  for (std::size_t j = 0; j <= n; ++j) catalytic[j] = catalytic_at(p, q, grid(j));

  RegionReport report;
  report.scan_resolution = n;
  report.refine_precision = options.refine_precision;
  for (std::size_t j = 0; j <= n;) {
    if (!catalytic[j]) {
      ++j;
      continue;
    }
    std::size_t last = j;
    while (last + 1 <= n && catalytic[last + 1]) ++last;

    Region region;
    region.lo = region.lo_outer = grid(j);
    region.hi = region.hi_outer = grid(last);
    if (j > 0) {
      region.lo_outer = grid(j - 1);
      bisect(p, q, region.lo, region.lo_outer, options.refine_precision);
      region.lo_refined = true;
    }
    if (last < n) {
      region.hi_outer = grid(last + 1);
      bisect(p, q, region.hi, region.hi_outer, options.refine_precision);
      region.hi_refined = true;
    }
    report.regions.push_back(std::move(region));
    j = last + 1;
  }
  return report;
}

std::uint64_t count_sorted_compositions(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Partitions of n into parts of size at most k (conjugate of "at most k parts").
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t size = 1; size <= k && size <= n; ++size) {
    for (std::size_t total = size; total <= n; ++total) {
      const std::uint64_t add = ways[total - size];
      ways[total] = ways[total] > kMax - add ? kMax : ways[total] + add;
    }
  }
  return ways[n];
}

GridSearchResult grid_search(const ProbVec& p, const ProbVec& q, std::size_t k,
                             std::size_t resolution, const SearchOptions& options) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "catalyst dimension k must be >= 1");
  if (resolution < k) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= k");

  GridSearchResult result;
  result.k = k;
  result.resolution = resolution;
  result.candidates = count_sorted_compositions(resolution, k);
  if (result.candidates > options.limit) {
    throw Error(ErrorCode::ResourceLimit,
                "grid of " + (result.candidates == std::numeric_limits<std::uint64_t>::max()
                                  ? std::string("more than 2^64")
                                  : std::to_string(result.candidates)) +
                    " candidates exceeds the limit of " + std::to_string(options.limit));
  }

  // First parts run from N down to ceil(N/k); each is an independent slice.
  const std::size_t first_lo = (resolution + k - 1) / k;
  std::vector<std::size_t> firsts;
  for (std::size_t f = resolution + 1; f-- > first_lo;) firsts.push_back(f);

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size())));

  if (threads == 1 || options.max_results != 0) {
    for (std::size_t f : firsts) {
      const std::size_t room =
          options.max_results ? options.max_results - result.catalysts_found.size() : 0;
      auto found = search_first_part(p, q, resolution, k, f, room);
      for (auto& r : found) result.catalysts_found.push_back(std::move(r));
      if (options.max_results && result.catalysts_found.size() >= options.max_results) {
        result.exhausted = false;
        return result;
      }
    }
    result.exhausted = true;
    return result;
  }

  // Strided slices per worker, merged back in enumeration order.
  std::vector<std::vector<ProbVec>> per_first(firsts.size());
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < firsts.size(); i += threads) {
        per_first[i] = search_first_part(p, q, resolution, k, firsts[i], 0);
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& slice : per_first) {
    for (auto& r : slice) result.catalysts_found.push_back(std::move(r));
  }
  result.exhausted = true;
  return result;
}

std::optional<std::size_t> empirical_min_dimension(const ProbVec& p, const ProbVec& q,
                                                   std::size_t k_max, std::size_t resolution,
                                                   const SearchOptions& options) {
  if (k_max < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 2");
  SearchOptions first_hit = options;
  first_hit.max_results = 1;
  for (std::size_t k = 1; k <= k_max && k <= resolution; ++k) {
    if (!grid_search(p, q, k, resolution, first_hit).catalysts_found.empty()) return k;
  }
  return std::nullopt;
}

}  // namespace catalyxis
