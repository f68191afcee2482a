#include "ulab/hyper/kernel.hpp"

#include "ulab/error.hpp"

#include <vector>

namespace ulab::hyper {

Magnitude classify(const HyperReal& x) {
  const auto lead = x.leading_exponent();
  if (!lead || *lead > 0) return Magnitude::infinitesimal;
  return *lead < 0 ? Magnitude::unlimited : Magnitude::limited;
}

std::string_view magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::infinitesimal: return "infinitesimal";
    case Magnitude::limited: return "limited-noninfinitesimal";
    case Magnitude::unlimited: return "unlimited";
  }
  return "?";
}

Scalar st(const HyperReal& x) {
  if (classify(x) == Magnitude::unlimited) fail(Errc::Unlimited, "standard part of unlimited value " + x.str());
  return x.coefficient(0);
}

bool monad_equivalent(const HyperReal& x, const HyperReal& y) {
  return classify(x - y) == Magnitude::infinitesimal;
}

std::string_view transcendental_name(Transcendental fn) {
  switch (fn) {
    case Transcendental::sin: return "sin";
    case Transcendental::cos: return "cos";
    case Transcendental::exp: return "exp";
  }
  return "?";
}

Scalar trig_half_pi(Transcendental fn, const Scalar& t) {
  if (fn == Transcendental::exp) fail(Errc::InvalidArgument, "trig_half_pi takes sin or cos");
  if (t.is_integer()) {
    // cos(k pi/2) = sin((k+1) pi/2)
    const BigInt k = floor_of(t.exact()) + (fn == Transcendental::cos ? 1 : 0);
    const int phase = static_cast<int>(((k % 4) + 4) % 4);
    static constexpr int kSinQuarter[4] = {0, 1, 0, -1};
    return Scalar(kSinQuarter[phase]);
  }
  const Decimal angle = t.to_decimal() * pi() / 2;
  return Scalar(fn == Transcendental::sin ? Decimal(sin(angle)) : Decimal(cos(angle)));
}

namespace {

// Sum of derivative[k] * (scale*h)^k / k! for k = 0..order.
HyperReal taylor(const std::vector<Scalar>& derivative_cycle, bool cycle_every_step, const Scalar& scale,
                 const HyperReal& h, int order) {
  HyperReal result(Scalar(0), order);
  HyperReal power(Scalar(1), order);
  Scalar scale_power(1);
  Rational factorial(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      power = power * h;
      scale_power = scale_power * scale;
      factorial *= k;
      if (power.is_zero()) break;
    }
    const Scalar& d = cycle_every_step ? derivative_cycle[static_cast<std::size_t>(k) % derivative_cycle.size()]
                                       : derivative_cycle.front();
    if (d.is_zero()) continue;
    result = result + power * HyperReal(d * scale_power / Scalar(factorial), order);
  }
  return result;
}

void require_limited(const HyperReal& x, std::string_view what) {
  if (classify(x) == Magnitude::unlimited)
    fail(Errc::Unlimited, std::string(what) + " of unlimited argument " + x.str());
}

}  // namespace

HyperReal lift(Transcendental fn, const HyperReal& x) {
  require_limited(x, transcendental_name(fn));
  const Scalar s = st(x);
  const HyperReal h = x - HyperReal(s, x.order());
  if (fn == Transcendental::exp) {
    const Scalar base = s.is_zero() ? Scalar(1) : Scalar(Decimal(exp(s.to_decimal())));
    return taylor({base}, false, Scalar(1), h, x.order());
  }
  Scalar sin_s, cos_s;
  if (s.is_zero()) {
    sin_s = Scalar(0);
    cos_s = Scalar(1);
  } else {
    const Decimal d = s.to_decimal();
    sin_s = Scalar(Decimal(sin(d)));
    cos_s = Scalar(Decimal(cos(d)));
  }
  // derivatives of sin: sin, cos, -sin, -cos
  std::vector<Scalar> cycle = {sin_s, cos_s, -sin_s, -cos_s};
  if (fn == Transcendental::cos) cycle = {cos_s, -sin_s, -cos_s, sin_s};
  return taylor(cycle, true, Scalar(1), h, x.order());
}

HyperReal lift_half_pi(Transcendental fn, const HyperReal& u) {
  if (fn == Transcendental::exp) return lift(fn, u * HyperReal(Scalar(pi() / 2), u.order()));
  require_limited(u, transcendental_name(fn));
  const Scalar s = st(u);
  const HyperReal h = u - HyperReal(s, u.order());
  std::vector<Scalar> cycle;
  for (int k = 0; k < 4; ++k) cycle.push_back(trig_half_pi(fn, s + Scalar(k)));
  if (h.is_zero()) return HyperReal(cycle.front(), u.order());
  return taylor(cycle, true, Scalar(pi() / 2), h, u.order());
}

NatLike::NatLike(int n) : NatLike(HyperReal(Scalar(n))) {}
NatLike::NatLike(const BigInt& n) : NatLike(HyperReal(Scalar(n))) {}

NatLike::NatLike(HyperReal value) : value_(std::move(value)) {
  if (value_.sign() < 0) fail(Errc::NegativeInput, "nat-like value must be nonnegative, got " + value_.str());
}

std::optional<BigInt> NatLike::as_natural() const {
  if (!value_.is_standard()) return std::nullopt;
  const Scalar c = value_.coefficient(0);
  if (!c.is_integer()) return std::nullopt;
  return floor_of(c.exact());
}

NatLike hypernat_for(const Rational& r, int order) {
  if (r < 0) fail(Errc::NegativeInput, "hypernat_for needs r >= 0, got " + rational_str(r));
  return NatLike(HyperReal::monomial(Scalar(r), -1, order));
}

HyperReal hypersum_const(const NatLike& count, const HyperReal& summand) { return count.value() * summand; }

Approximation approximate_shadow(const Rational& r, const BigInt& m) {
  if (m < 1) fail(Errc::InvalidArgument, "approximation grid needs m >= 1");
  Approximation a;
  a.r = r;
  a.m = m;
  a.n = floor_of(r);
  a.c = floor_of((r - Rational(a.n)) * Rational(m));
  a.f = m * a.n + a.c;
  a.gap = r - Rational(a.f, m);
  a.certified = a.gap >= 0 && a.gap < Rational(1, m) && a.c >= 0 && a.c < m;
  return a;
}

}  // namespace ulab::hyper
