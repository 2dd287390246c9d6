// Exact rational scalars and small determinants.
//
// Every geometric quantity in this library is an exact rational.  Values are
// kept in canonical form (positive denominator, gcd(num, den) = 1) after every
// operation, so equal values always have identical representations and
// equality tests are exact.

#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sos {

using BigInt = mpz_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign sign_of(int v) { return v < 0 ? Sign::Negative : (v > 0 ? Sign::Positive : Sign::Zero); }
constexpr std::strong_ordering operator<=>(Sign a, Sign b) {
  return static_cast<int>(a) <=> static_cast<int>(b);
}
const char* to_string(Sign s);

/// Thrown when text cannot be read as an exact rational.  `token()` is the
/// offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A caller broke a documented precondition (for example, compared a
/// perturbed coordinate with itself).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision rational number in canonical form.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : q_(integer) {}
  /// num/den, canonicalized.  Throws ContractViolation for den == 0.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q);

  const mpq_class& raw() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }

  Sign sign() const { return sign_of(sgn(q_)); }
  Rational abs() const;
  /// Largest integer <= this.
  BigInt floor() const;
  double to_double() const { return q_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws ContractViolation on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

/// Parses an optionally signed integer ("-12"), fraction ("3/4") or finite
/// decimal ("0.125").  Decimals are exact: "0.1" is 1/10.  Exponent notation,
/// "inf" and "nan" are rejected.
Rational parse_exact(std::string_view text);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Matrix4 = std::array<std::array<Rational, 4>, 4>;

Rational det3(const Matrix3& m);
Rational det4(const Matrix4& m);
inline Sign det3_sign(const Matrix3& m) { return det3(m).sign(); }
inline Sign det4_sign(const Matrix4& m) { return det4(m).sign(); }

}  // namespace sos
