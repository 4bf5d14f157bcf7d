#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace catalyxis {

/// Exact rational number backed by GMP. Always canonical: lowest terms,
/// positive denominator. No operation ever rounds.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts integers, fractions ("3/11") and decimals with an optional
  /// exponent ("0.45", "-1.5e-3", ".5"). Throws Error(Parse).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(ZeroDenominator) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_fraction() const;
  /// Terminating decimal expansion when the denominator is 2^a 5^b.
  std::optional<std::string> to_exact_decimal() const;
  /// Shortest exact text: terminating decimal if one exists, else a fraction.
  std::string to_string() const;
  /// Fixed-point text rounded half-to-even at `significant` digits, trailing
  /// zeros removed. Rounding is done exactly, not through a double.
  std::string to_decimal(int significant) const;

  double to_double() const;
  /// Natural logarithm without intermediate overflow; requires a positive value.
  double ln() const;

  /// this^exponent for exponent >= 0.
  Rational pow(unsigned long exponent) const;

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

/// Rational extended with +infinity, used for ratios whose denominator can be
/// zero.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  static ExtendedRational infinity() { return ExtendedRational(Infinite{}); }

  /// numerator / denominator, or +infinity when denominator is zero.
  static ExtendedRational ratio(const Rational& numerator, const Rational& denominator);

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: finite.
  const Rational& value() const { return *value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  std::string to_string() const;
  double to_double() const;

 private:
  struct Infinite {};
  explicit ExtendedRational(Infinite) : value_(std::nullopt) {}
  std::optional<Rational> value_ = Rational(0);
};

}  // namespace catalyxis
