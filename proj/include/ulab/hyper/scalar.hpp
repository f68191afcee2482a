#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace ulab::hyper {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Decimal = boost::multiprecision::mpfr_float;

/// Significant decimal digits used for transcendental-tainted values.
/// Working precision carries ten guard digits on top of this.
void set_decimal_digits(unsigned digits);
unsigned decimal_digits();

/// Two decimal values compare equal when they differ by at most this
/// (10^-(digits-10), i.e. 1e-40 at the default 50 digits).
const Decimal& equality_tolerance();

/// pi at the current working precision.
const Decimal& pi();

/// Parses "7", "-5/2", "0.125", "3e-2" into an exact rational.
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);
BigInt floor_of(const Rational& q);

/// A series coefficient: an exact rational, or a decimal once a
/// transcendental value has entered the computation.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}             // NOLINT
  Scalar(long long v) : value_(Rational(v)) {}       // NOLINT
  Scalar(const BigInt& v) : value_(Rational(v)) {}   // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}       // NOLINT
  Scalar(const Decimal& v);                          // NOLINT
  template <class Tag, class A1, class A2, class A3, class A4>
  Scalar(const boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>& e)  // NOLINT
      : Scalar(typename boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>::result_type(e)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_zero() const;
  int sign() const;

  /// Exact value; throws InvalidArgument for decimals.
  const Rational& exact() const;
  Decimal to_decimal() const;
  bool is_integer() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Exact comparison for rationals; tolerance comparison once a decimal is involved.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  std::variant<Rational, Decimal> value_;
};

Scalar abs(const Scalar& s);

}  // namespace ulab::hyper
