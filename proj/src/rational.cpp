#include "catalyxis/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "catalyxis/error.hpp"

namespace catalyxis {
namespace {

constexpr long kMaxExponent = 4096;

[[noreturn]] void parse_failure(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::Parse,
              "cannot parse '" + std::string(text) + "' as a rational: " + std::string(why));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Integer nearest to n/d (d > 0, n >= 0), ties to even.
mpz_class round_half_even(const mpz_class& n, const mpz_class& d) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int c = cmp(mpz_class(2 * r), d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

double mpz_ln(const mpz_class& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) parse_failure(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_failure(text, "malformed fraction");
    const mpz_class d(std::string(den), 10);
    if (d == 0) parse_failure(text, "zero denominator");
    result = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) parse_failure(text, "malformed exponent");
      exponent = std::stol(std::string(exp_text));
      if (exponent > kMaxExponent) parse_failure(text, "exponent out of range");
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) parse_failure(text, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      parse_failure(text, "unexpected character");
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    const mpz_class mantissa(digits, 10);
    const long scale = exponent - static_cast<long>(frac_part.size());
    if (scale >= 0) {
      result = mpq_class(mantissa * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = mpq_class(mantissa, pow10(static_cast<unsigned long>(-scale)));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return Rational(std::move(result));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_fraction() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<std::string> Rational::to_exact_decimal() const {
  mpz_class den = value_.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return std::nullopt;
  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value_.get_num().get_str();

  mpz_class scaled = value_.get_num() * pow10(places) / value_.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  return (negative ? "-" : "") + digits;
}

std::string Rational::to_string() const {
  if (auto d = to_exact_decimal()) return *d;
  return to_fraction();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) throw Error(ErrorCode::InvalidArgument, "significant digits must be >= 1");
  if (is_zero()) return "0";
  const mpq_class x = ::abs(value_);

  // Decimal exponent e with 10^e <= x < 10^(e+1), estimated then corrected.
  long e = static_cast<long>(std::floor((mpz_ln(x.get_num()) - mpz_ln(x.get_den())) / std::log(10.0)));
  auto power = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                  : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (cmp(power(e), x) > 0) --e;
  while (cmp(power(e + 1), x) <= 0) ++e;

  const long shift = significant - 1 - e;
  const mpq_class scaled = x * power(shift);
  mpz_class digits_value = round_half_even(scaled.get_num(), scaled.get_den());
  long point = shift;  // value = digits_value * 10^-point
  if (digits_value == pow10(static_cast<unsigned long>(significant))) {
    digits_value /= 10;
    --point;
  }

  std::string digits = digits_value.get_str();
  if (point <= 0) {
    digits.append(static_cast<std::size_t>(-point), '0');
  } else {
    const auto p = static_cast<std::size_t>(point);
    if (digits.size() <= p) digits.insert(0, p - digits.size() + 1, '0');
    digits.insert(digits.size() - p, 1, '.');
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return (sign() < 0 ? "-" : "") + digits;
}

// Nearest double (ties to even): scale so the quotient carries 53 bits,
// round once, then let ldexp place the exponent.
double Rational::to_double() const {
  if (is_zero()) return 0.0;
  mpz_class num;
  mpz_abs(num.get_mpz_t(), value_.get_num().get_mpz_t());
  const mpz_class& den = value_.get_den();
  long shift = 53 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  auto quotient = [&](long s) {
    return s >= 0 ? round_half_even(mpz_class(num << s), den) : round_half_even(num, mpz_class(den << -s));
  };
  mpz_class q = quotient(shift);
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 53) q = quotient(--shift);
  const double magnitude = std::ldexp(q.get_d(), static_cast<int>(-shift));
  return sign() < 0 ? -magnitude : magnitude;
}

double Rational::ln() const {
  if (sign() <= 0) return sign() == 0 ? -std::numeric_limits<double>::infinity()
                                      : std::numeric_limits<double>::quiet_NaN();
  return mpz_ln(value_.get_num()) - mpz_ln(value_.get_den());
}

Rational Rational::pow(unsigned long exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

ExtendedRational ExtendedRational::ratio(const Rational& numerator, const Rational& denominator) {
  if (denominator.is_zero()) return infinity();
  return ExtendedRational(numerator / denominator);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return a.value() <=> b.value();
}

std::string ExtendedRational::to_string() const {
  return is_infinite() ? "inf" : value().to_fraction();
}

double ExtendedRational::to_double() const {
  return is_infinite() ? std::numeric_limits<double>::infinity() : value().to_double();
}

}  // namespace catalyxis
