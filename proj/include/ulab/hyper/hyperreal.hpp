#pragma once

#include "ulab/hyper/scalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace ulab::hyper {

/// Process-wide default truncation order K (>= 2, default 8).
void set_default_order(int order);
int default_order();

/// A truncated Laurent series sum(a_q * e^q) in one positive infinitesimal e.
/// Omega = 1/e is the unlimited unit. Exponents live in [-K, K]: a result
/// needing an exponent below -K raises TruncationOverflow (those terms dominate),
/// while terms above K are the unresolved infinitesimal tail and are dropped.
class HyperReal {
 public:
  using Terms = std::map<int, Scalar>;

  HyperReal() : order_(default_order()) {}
  HyperReal(Scalar constant, int order = default_order());  // NOLINT
  HyperReal(int constant) : HyperReal(Scalar(constant)) {}  // NOLINT

  static HyperReal monomial(Scalar coefficient, int exponent, int order = default_order());
  static HyperReal epsilon(int order = default_order()) { return monomial(1, 1, order); }
  static HyperReal omega(int order = default_order()) { return monomial(1, -1, order); }
  /// Throws TruncationOverflow when any exponent falls outside [-order, order].
  static HyperReal from_terms(const Terms& terms, int order = default_order());

  const Terms& terms() const { return terms_; }
  int order() const { return order_; }
  Scalar coefficient(int exponent) const;
  /// Most negative exponent carrying a nonzero coefficient.
  std::optional<int> leading_exponent() const;
  std::optional<int> highest_exponent() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const;
  /// Sign of the leading coefficient (e > 0).
  int sign() const;
  /// True when the value is a plain standard number (only the e^0 term).
  bool is_standard() const;

  HyperReal with_order(int order) const;

  HyperReal operator-() const;
  HyperReal& operator+=(const HyperReal& o) { return *this = *this + o; }
  HyperReal& operator-=(const HyperReal& o) { return *this = *this - o; }
  HyperReal& operator*=(const HyperReal& o) { return *this = *this * o; }

  friend HyperReal operator+(const HyperReal& a, const HyperReal& b);
  friend HyperReal operator-(const HyperReal& a, const HyperReal& b);
  friend HyperReal operator*(const HyperReal& a, const HyperReal& b);
  /// Exact through exponent K; the divisor's inverse is expanded as far as needed.
  friend HyperReal operator/(const HyperReal& a, const HyperReal& b);

  friend bool operator==(const HyperReal& a, const HyperReal& b);

  /// Canonical text, ascending exponents: "7e^-1 + 3 + 5e - 2e^3".
  std::string str() const;

 private:
  Terms terms_;
  int order_;
};

HyperReal pow(const HyperReal& base, int exponent);

enum class Ordering { less, equal, greater };

/// Lexicographic on the most negative nonzero exponent of x - y.
Ordering compare(const HyperReal& x, const HyperReal& y);
std::string_view ordering_name(Ordering o);

inline bool operator<(const HyperReal& a, const HyperReal& b) { return compare(a, b) == Ordering::less; }
inline bool operator>(const HyperReal& a, const HyperReal& b) { return compare(a, b) == Ordering::greater; }
inline bool operator<=(const HyperReal& a, const HyperReal& b) { return compare(a, b) != Ordering::greater; }
inline bool operator>=(const HyperReal& a, const HyperReal& b) { return compare(a, b) != Ordering::less; }

}  // namespace ulab::hyper
