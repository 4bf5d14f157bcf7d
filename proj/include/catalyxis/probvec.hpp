#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "catalyxis/rational.hpp"

namespace catalyxis {

/// A Schmidt-coefficient vector: nonnegative exact entries summing to one,
/// stored sorted non-increasing. Immutable once built.
class ProbVec {
 public:
  /// Validates and sorts. Throws Error(NegativeEntry) naming the first
  /// offending index, Error(SumNotOne) with the exact deviation, or
  /// Error(InvalidArgument) for an empty input.
  static ProbVec make(std::vector<Rational> raw);
  /// Convenience for literals: each string goes through Rational::parse.
  static ProbVec parse(std::span<const std::string> raw);
  static ProbVec uniform(std::size_t k);
  /// (1-t, t), sorted; requires 0 <= t <= 1.
  static ProbVec qubit(const Rational& t);

  std::size_t size() const noexcept { return entries_.size(); }
  /// Zero-based access into the sorted entries.
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Copy with zeros appended up to length n (no-op if already longer).
  ProbVec padded(std::size_t n) const;
  /// Copy without its zero entries; never empty.
  ProbVec without_zeros() const;

  friend bool operator==(const ProbVec&, const ProbVec&) = default;

  /// "(0.45, 0.35, ...)" using exact text for each entry.
  std::string to_string() const;

 private:
  explicit ProbVec(std::vector<Rational> sorted) : entries_(std::move(sorted)) {}
  friend ProbVec tensor(const ProbVec&, const ProbVec&);

  std::vector<Rational> entries_;
};

/// All pairwise products p_i r_x, sorted non-increasing.
ProbVec tensor(const ProbVec& p, const ProbVec& r);

/// Element l (zero-based) is the sum of the l+1 largest entries.
std::vector<Rational> prefix_sums(const ProbVec& p);

}  // namespace catalyxis
