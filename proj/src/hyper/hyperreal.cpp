#include "ulab/hyper/hyperreal.hpp"

#include "ulab/error.hpp"

#include <algorithm>

namespace ulab::hyper {
namespace {

int& default_order_ref() {
  thread_local int order = 8;
  return order;
}

using Terms = HyperReal::Terms;

void add_into(Terms& into, int exponent, const Scalar& c) {
  auto [it, inserted] = into.try_emplace(exponent, c);
  if (!inserted) it->second += c;
}

void prune(Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
}

// Product keeping only exponents <= max_exponent.
Terms multiply_raw(const Terms& a, const Terms& b, int max_exponent) {
  Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea + eb > max_exponent) break;
      add_into(out, ea + eb, ca * cb);
    }
  }
  prune(out);
  return out;
}

// Drops the tail above `order` and rejects dominant terms below -order.
Terms window(Terms terms, int order) {
  prune(terms);
  if (!terms.empty() && terms.begin()->first < -order)
    fail(Errc::TruncationOverflow, "exponent " + std::to_string(terms.begin()->first) +
                                       " outside truncation window [-" + std::to_string(order) +
                                       ", " + std::to_string(order) + "]");
  std::erase_if(terms, [order](const auto& kv) { return kv.first > order; });
  return terms;
}

// 1/y as raw terms, exact through exponent `through`.
Terms inverse_raw(const Terms& y, int through) {
  const int lead = y.begin()->first;
  const Scalar lead_coef = y.begin()->second;
  // y = c e^lead (1 + z), z has exponents >= 1
  Terms z;
  for (const auto& [e, c] : y)
    if (e != lead) z.emplace(e - lead, c / lead_coef);
  const int inner_through = std::max(0, through + lead);
  Terms neg_z;
  for (const auto& [e, c] : z) neg_z.emplace(e, -c);
  Terms inner{{0, Scalar(1)}};
  Terms power{{0, Scalar(1)}};
  for (int k = 1; k <= inner_through; ++k) {
    power = multiply_raw(power, neg_z, inner_through);
    if (power.empty()) break;
    for (const auto& [e, c] : power) add_into(inner, e, c);
  }
  prune(inner);
  Terms out;
  for (const auto& [e, c] : inner) out.emplace(e - lead, c / lead_coef);
  return out;
}

}  // namespace

void set_default_order(int order) {
  if (order < 2) fail(Errc::InvalidArgument, "truncation order K must be at least 2");
  default_order_ref() = order;
}

int default_order() { return default_order_ref(); }

HyperReal::HyperReal(Scalar constant, int order) : order_(order) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

HyperReal HyperReal::monomial(Scalar coefficient, int exponent, int order) {
  return from_terms(Terms{{exponent, std::move(coefficient)}}, order);
}

HyperReal HyperReal::from_terms(const Terms& terms, int order) {
  HyperReal out;
  out.order_ = order;
  out.terms_ = terms;
  prune(out.terms_);
  if (!out.terms_.empty() &&
      (out.terms_.begin()->first < -order || out.terms_.rbegin()->first > order))
    fail(Errc::TruncationOverflow, "term exponent outside [-" + std::to_string(order) + ", " +
                                       std::to_string(order) + "]");
  return out;
}

Scalar HyperReal::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> HyperReal::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> HyperReal::highest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

bool HyperReal::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

int HyperReal::sign() const { return terms_.empty() ? 0 : terms_.begin()->second.sign(); }

bool HyperReal::is_standard() const { return terms_.empty() || (terms_.size() == 1 && terms_.count(0) == 1); }

HyperReal HyperReal::with_order(int order) const { return from_terms(terms_, order); }

HyperReal HyperReal::operator-() const {
  HyperReal out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

HyperReal operator+(const HyperReal& a, const HyperReal& b) {
  HyperReal out;
  out.order_ = std::max(a.order_, b.order_);
  out.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) add_into(out.terms_, e, c);
  out.terms_ = window(std::move(out.terms_), out.order_);
  return out;
}

HyperReal operator-(const HyperReal& a, const HyperReal& b) { return a + (-b); }

HyperReal operator*(const HyperReal& a, const HyperReal& b) {
  HyperReal out;
  out.order_ = std::max(a.order_, b.order_);
  out.terms_ = window(multiply_raw(a.terms_, b.terms_, out.order_), out.order_);
  return out;
}

HyperReal operator/(const HyperReal& a, const HyperReal& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division of " + a.str() + " by zero");
  HyperReal out;
  out.order_ = std::max(a.order_, b.order_);
  if (a.is_zero()) return out;
  const int a_lead = a.terms_.begin()->first;
  Terms inv = inverse_raw(b.terms_, out.order_ - a_lead);
  out.terms_ = window(multiply_raw(a.terms_, inv, out.order_), out.order_);
  return out;
}

bool operator==(const HyperReal& a, const HyperReal& b) { return (a - b).is_zero(); }

std::string HyperReal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mag = magnitude.str();
    const bool unit = magnitude.is_exact() && magnitude.exact() == 1;
    if (e == 0) {
      out += mag;
      continue;
    }
    if (!unit) out += mag.find('/') != std::string::npos ? "(" + mag + ")" : mag;
    out += "e";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

HyperReal pow(const HyperReal& base, int exponent) {
  if (exponent < 0) return HyperReal(Scalar(1), base.order()) / pow(base, -exponent);
  HyperReal result(Scalar(1), base.order());
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

Ordering compare(const HyperReal& x, const HyperReal& y) {
  const int s = (x - y).sign();
  return s < 0 ? Ordering::less : s > 0 ? Ordering::greater : Ordering::equal;
}

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

}  // namespace ulab::hyper
