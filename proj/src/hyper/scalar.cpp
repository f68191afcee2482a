#include "ulab/hyper/scalar.hpp"

#include "ulab/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

namespace ulab::hyper {
namespace {

constexpr unsigned kGuardDigits = 10;

struct DecimalContext {
  unsigned digits = 0;
  Decimal tolerance;
  Decimal zero_threshold;
  Decimal pi;
};

DecimalContext& context() {
  thread_local DecimalContext ctx;
  if (ctx.digits == 0) {
    ctx.digits = 50;
    Decimal::default_precision(ctx.digits + kGuardDigits);
    ctx.tolerance = pow(Decimal(10), -static_cast<int>(ctx.digits - 10));
    ctx.zero_threshold = pow(Decimal(10), -static_cast<int>(ctx.digits));
    ctx.pi = boost::math::constants::pi<Decimal>();
  }
  return ctx;
}

// Decimal noise below the zero threshold is cancellation residue.
std::variant<Rational, Decimal> normalize(Decimal d) {
  if (abs(d) < context().zero_threshold) return Rational(0);
  return d;
}

}  // namespace

void set_decimal_digits(unsigned digits) {
  if (digits < 20) fail(Errc::InvalidArgument, "decimal precision must be at least 20 digits");
  auto& ctx = context();
  ctx.digits = digits;
  Decimal::default_precision(digits + kGuardDigits);
  ctx.tolerance = pow(Decimal(10), -static_cast<int>(digits - 10));
  ctx.zero_threshold = pow(Decimal(10), -static_cast<int>(digits));
  ctx.pi = boost::math::constants::pi<Decimal>();
}

unsigned decimal_digits() { return context().digits; }

const Decimal& equality_tolerance() { return context().tolerance; }

const Decimal& pi() { return context().pi; }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(Errc::ParseError, "empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      Rational num = parse_rational(s.substr(0, slash));
      Rational den = parse_rational(s.substr(slash + 1));
      if (den == 0) fail(Errc::DivisionByZero, "zero denominator in '" + s + "'");
      return num / den;
    }
    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::string mantissa;
    std::string fraction;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) mantissa.push_back(s[i++]);
    if (i < s.size() && s[i] == '.') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fraction.push_back(s[i++]);
    }
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      std::size_t used = 0;
      exponent = std::stol(s.substr(i), &used);
      i += used;
    }
    if (i != s.size() || (mantissa.empty() && fraction.empty()))
      fail(Errc::ParseError, "not a number: '" + s + "'");
    BigInt digits(mantissa + fraction + (mantissa.empty() && fraction.empty() ? "0" : ""));
    Rational value(digits);
    long shift = exponent - static_cast<long>(fraction.size());
    BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    value = shift < 0 ? value / Rational(ten_pow) : value * Rational(ten_pow);
    return negative ? Rational(-value) : value;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "not a number: '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(Errc::ParseError, "number out of range: '" + s + "'");
  }
}

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt floor_of(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt quotient = n / d;
  if (n < 0 && quotient * d != n) quotient -= 1;
  return quotient;
}

Scalar::Scalar(const Decimal& v) : value_(normalize(v)) {}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->sign();
  return std::get<Decimal>(value_).sign();
}

const Rational& Scalar::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  fail(Errc::InvalidArgument, "value " + str() + " is a decimal, not an exact rational");
}

Decimal Scalar::to_decimal() const {
  context();  // sets the working precision on first use
  if (const auto* q = std::get_if<Rational>(&value_)) return Decimal(*q);
  return std::get<Decimal>(value_);
}

bool Scalar::is_integer() const {
  const auto* q = std::get_if<Rational>(&value_);
  return q != nullptr && denominator(*q) == 1;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return rational_str(*q);
  std::string text = std::get<Decimal>(value_).str(static_cast<std::streamsize>(decimal_digits()));
  // uppercase exponent so decimals never collide with the series symbol e
  for (char& c : text)
    if (c == 'e') c = 'E';
  return text;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(Decimal(-std::get<Decimal>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() + b.exact()));
  return Scalar(Decimal(a.to_decimal() + b.to_decimal()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() - b.exact()));
  return Scalar(Decimal(a.to_decimal() - b.to_decimal()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
  // exact zero annihilates decimals too
  if (a.is_exact() && a.exact() == 0) return Scalar();
  if (b.is_exact() && b.exact() == 0) return Scalar();
  return Scalar(Decimal(a.to_decimal() * b.to_decimal()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division of " + a.str() + " by zero");
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() / b.exact()));
  if (a.is_exact() && a.exact() == 0) return Scalar();
  return Scalar(Decimal(a.to_decimal() / b.to_decimal()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return abs(Decimal(a.to_decimal() - b.to_decimal())) <= equality_tolerance();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace ulab::hyper
