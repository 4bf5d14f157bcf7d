#include "catalyxis/probvec.hpp"

#include <algorithm>
#include <functional>

#include "catalyxis/error.hpp"

namespace catalyxis {

ProbVec ProbVec::make(std::vector<Rational> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "probability vector must be nonempty");
  Rational total;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].sign() < 0) {
      throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(i) + " is negative (" +
                                                raw[i].to_string() + ")");
    }
    total += raw[i];
  }
  if (total != Rational(1)) {
    const Rational deviation = total - Rational(1);
    throw Error(ErrorCode::SumNotOne, "entries sum to " + total.to_string() + " (deviation " +
                                          (deviation.sign() > 0 ? "+" : "") +
                                          deviation.to_string() + " from 1)");
  }
  std::stable_sort(raw.begin(), raw.end(), std::greater<>());
  return ProbVec(std::move(raw));
}

ProbVec ProbVec::parse(std::span<const std::string> raw) {
  std::vector<Rational> values;
  values.reserve(raw.size());
  for (const auto& s : raw) values.push_back(Rational::parse(s));
  return make(std::move(values));
}

ProbVec ProbVec::uniform(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "uniform vector needs k >= 1");
  return ProbVec(std::vector<Rational>(k, Rational(1, static_cast<long>(k))));
}

ProbVec ProbVec::qubit(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "qubit parameter must lie in [0, 1]");
  }
  return make({Rational(1) - t, t});
}

ProbVec ProbVec::padded(std::size_t n) const {
  if (n <= size()) return *this;
  auto entries = entries_;
  entries.resize(n);
  return ProbVec(std::move(entries));
}

ProbVec ProbVec::without_zeros() const {
  auto entries = entries_;
  while (entries.back().is_zero()) entries.pop_back();
  return ProbVec(std::move(entries));
}

std::string ProbVec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

ProbVec tensor(const ProbVec& p, const ProbVec& r) {
  std::vector<Rational> out;
  out.reserve(p.size() * r.size());
  for (const auto& a : p) {
    for (const auto& b : r) out.push_back(a * b);
  }
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return ProbVec(std::move(out));
}

std::vector<Rational> prefix_sums(const ProbVec& p) {
  std::vector<Rational> sums;
  sums.reserve(p.size());
  Rational running;
  for (const auto& x : p) {
    running += x;
    sums.push_back(running);
  }
  return sums;
}

}  // namespace catalyxis
