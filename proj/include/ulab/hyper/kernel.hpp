#pragma once

#include "ulab/hyper/hyperreal.hpp"

#include <string_view>

namespace ulab::hyper {

enum class Magnitude { infinitesimal, limited, unlimited };

/// infinitesimal: zero or only positive exponents; unlimited: some negative
/// exponent; limited: everything else (nonzero standard part, no pole).
Magnitude classify(const HyperReal& x);
std::string_view magnitude_name(Magnitude m);

/// Standard part. Throws Unlimited when x has a negative exponent.
Scalar st(const HyperReal& x);

/// x and y lie in the same monad (their difference is infinitesimal).
bool monad_equivalent(const HyperReal& x, const HyperReal& y);

enum class Transcendental { sin, cos, exp };
std::string_view transcendental_name(Transcendental fn);

/// sin or cos of t*pi/2 for a standard t. Exact when t is an integer.
Scalar trig_half_pi(Transcendental fn, const Scalar& t);

/// fn(x) for limited x, Taylor-expanded about st(x) through the series order.
/// Exact when x is exactly 0.
HyperReal lift(Transcendental fn, const HyperReal& x);

/// fn(u*pi/2) for limited u (sin or cos). Coefficients are exact when st(u) is
/// an integer and u carries no infinitesimal part.
HyperReal lift_half_pi(Transcendental fn, const HyperReal& u);

/// A nonnegative hypernatural-like value. Only st(value * e) is guaranteed.
class NatLike {
 public:
  NatLike(int n);                 // NOLINT
  NatLike(const BigInt& n);       // NOLINT
  explicit NatLike(HyperReal value);

  const HyperReal& value() const { return value_; }
  bool is_unlimited() const { return classify(value_) == Magnitude::unlimited; }
  /// The finite natural when the value is a standard integer.
  std::optional<BigInt> as_natural() const;
  std::string str() const { return value_.str(); }

  friend bool operator==(const NatLike& a, const NatLike& b) { return a.value_ == b.value_; }

 private:
  HyperReal value_;
};

/// lambda = r * Omega. Throws NegativeInput for r < 0.
NatLike hypernat_for(const Rational& r, int order = default_order());

/// A sum of `count` copies of the same summand, i.e. count * summand.
HyperReal hypersum_const(const NatLike& count, const HyperReal& summand);

struct Approximation {
  Rational r;
  BigInt m;
  BigInt n;  ///< floor(r)
  BigInt c;  ///< cell index in [0, m)
  BigInt f;  ///< m*n + c
  Rational gap;  ///< r - f/m
  bool certified = false;  ///< 0 <= gap < 1/m
};

/// Best lower grid approximation f/m of r. Throws InvalidArgument for m < 1.
Approximation approximate_shadow(const Rational& r, const BigInt& m);

}  // namespace ulab::hyper
