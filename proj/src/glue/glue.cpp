#include "ulab/glue/glue.hpp"

#include "ulab/error.hpp"
#include "ulab/hyper/expr.hpp"

#include <algorithm>
#include <fstream>

namespace ulab::glue {

using hyper::Scalar;
using hyper::Transcendental;

namespace {

HyperReal lift(const Rational& q, int order) { return HyperReal(Scalar(q), order); }

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return hyper::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return hyper::parse_rational(v.dump());
  fail(Errc::ParseError, "expected a rational, got " + v.dump());
}

}  // namespace

void StepSpec::validate() const {
  if (partition.size() < 3) fail(Errc::InvalidArgument, "a step spec needs at least one interior partition point");
  if (values.size() + 1 != partition.size())
    fail(Errc::InvalidArgument, "a step spec needs one value per partition cell");
  for (std::size_t i = 1; i < partition.size(); ++i)
    if (!(partition[i - 1] < partition[i])) fail(Errc::InvalidArgument, "partition must be strictly increasing");
}

Rational StepSpec::min_gap() const {
  Rational gap = partition[1] - partition[0];
  for (std::size_t i = 2; i < partition.size(); ++i) gap = std::min<Rational>(gap, partition[i] - partition[i - 1]);
  return gap;
}

Rational StepSpec::step_value(const Rational& x) const {
  if (x < partition.front() || x > partition.back()) fail(Errc::OutOfDomain, "x outside the step domain");
  for (std::size_t k = 0; k + 1 < partition.size(); ++k)
    if (x < partition[k + 1]) return values[k];
  return values.back();
}

StepSpec StepSpec::neutron() { return StepSpec{{0, 1, 2}, {2, 3}}; }

GlueFunction::GlueFunction(StepSpec spec, HyperReal delta) : spec_(std::move(spec)), delta_(std::move(delta)) {
  spec_.validate();
  if (delta_.sign() <= 0) fail(Errc::NonPositiveDelta, "delta must be positive, got " + delta_.str());
  const auto magnitude = hyper::classify(delta_);
  if (!delta_.is_standard() && magnitude != hyper::Magnitude::infinitesimal)
    fail(Errc::InvalidArgument, "delta must be a standard rational or an infinitesimal, got " + delta_.str());
  if (delta_.is_standard() && !delta_.is_exact()) fail(Errc::InvalidArgument, "standard delta must be rational");
  if (!(delta_ * HyperReal(2, delta_.order()) < lift(spec_.min_gap(), delta_.order())))
    fail(Errc::OverlappingTransitions, "2*delta must be below the smallest partition gap");
}

GlueFunction GlueFunction::from_json(const nlohmann::json& j) {
  try {
    StepSpec spec;
    for (const auto& v : j.at("partition")) spec.partition.push_back(rational_from_json(v));
    for (const auto& v : j.at("values")) spec.values.push_back(rational_from_json(v));
    const auto& d = j.at("delta");
    HyperReal delta = d.is_string() ? hyper::parse_hyperreal(d.get<std::string>()) : lift(rational_from_json(d), hyper::default_order());
    return GlueFunction(std::move(spec), std::move(delta));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("glue spec: ") + e.what());
  }
}

GlueFunction GlueFunction::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open glue spec " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, "glue spec " + path.string() + ": " + e.what());
  }
}

nlohmann::json GlueFunction::to_json() const {
  nlohmann::json partition = nlohmann::json::array(), values = nlohmann::json::array();
  for (const auto& a : spec_.partition) partition.push_back(hyper::rational_str(a));
  for (const auto& r : spec_.values) values.push_back(hyper::rational_str(r));
  return {{"partition", partition}, {"values", values}, {"delta", delta_.str()}};
}

Region GlueFunction::locate(const HyperReal& x) const {
  const int order = std::max(x.order(), delta_.order());
  const auto& a = spec_.partition;
  if (x < lift(a.front(), order) || x > lift(a.back(), order))
    fail(Errc::OutOfDomain, x.str() + " lies outside [" + hyper::rational_str(a.front()) + ", " +
                                hyper::rational_str(a.back()) + "]");
  for (std::size_t j = 1; j + 1 < a.size(); ++j) {
    const HyperReal lo = lift(a[j], order) - delta_;
    const HyperReal hi = lift(a[j], order) + delta_;
    if (x == lo) return {Region::Kind::left_boundary, j};
    if (x == hi) return {Region::Kind::right_boundary, j};
    if (lo < x && x < hi) return {Region::Kind::transition, j};
  }
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (x <= lift(a[k + 1], order)) return {Region::Kind::piece, k};
  return {Region::Kind::piece, a.size() - 2};
}

HyperReal GlueFunction::transition_u(std::size_t j, const HyperReal& x) const {
  return (x - lift(spec_.partition[j], x.order())) / delta_;
}

HyperReal GlueFunction::eval(const HyperReal& x) const {
  const Region region = locate(x);
  const int order = std::max(x.order(), delta_.order());
  if (region.kind == Region::Kind::piece) return lift(spec_.values[region.index], order);
  const std::size_t j = region.index;
  const HyperReal wave = hyper::lift_half_pi(Transcendental::sin, transition_u(j, x));
  return lift(jump(j) / 2, order) * (wave + HyperReal(1, order)) + lift(spec_.values[j - 1], order);
}

HyperReal GlueFunction::derivative(int m, const HyperReal& x) const {
  if (m < 1) fail(Errc::InvalidArgument, "derivative order must be >= 1");
  const Region region = locate(x);
  const int order = std::max(x.order(), delta_.order());
  if (region.kind == Region::Kind::piece) return HyperReal(0, order);
  if (region.kind != Region::Kind::transition && m % 2 == 1) return HyperReal(0, order);
  const std::size_t j = region.index;
  const Scalar scale = Scalar(jump(j) / 2) * Scalar(hyper::Decimal(pow(hyper::pi() / 2, m)));
  const HyperReal wave = hyper::lift_half_pi(Transcendental::sin, transition_u(j, x) + HyperReal(m, order));
  return HyperReal(scale, order) * hyper::pow(delta_, -m) * wave;
}

Scalar GlueFunction::st_restrict(const Rational& x) const {
  const auto& a = spec_.partition;
  if (x < a.front() || x > a.back()) fail(Errc::OutOfDomain, hyper::rational_str(x) + " lies outside the domain");
  for (std::size_t j = 1; j + 1 < a.size(); ++j)
    if (x == a[j]) fail(Errc::OnPartitionPoint, hyper::rational_str(x) + " is an interior partition point");
  return hyper::st(eval(lift(x, delta_.order())));
}

HyperReal GlueFunction::derivative_bound() const {
  Rational largest = 0;
  for (std::size_t j = 1; j < spec_.values.size(); ++j) largest = std::max<Rational>(largest, abs(jump(j)));
  return HyperReal(Scalar(hyper::Decimal(hyper::pi() / 4)) * Scalar(largest), delta_.order()) /
         delta_;
}

RangeReport range_check(const GlueFunction& g) {
  const auto& spec = g.spec();
  RangeReport report;
  report.low = *std::min_element(spec.values.begin(), spec.values.end());
  report.high = *std::max_element(spec.values.begin(), spec.values.end());
  const int order = g.delta().order();
  auto sample = [&](const HyperReal& x, const Rational& expected) {
    const HyperReal value = g.eval(x);
    report.samples.push_back(x.str() + " -> " + value.str());
    const bool inside = value >= lift(report.low, order) && value <= lift(report.high, order);
    if (!(value == lift(expected, order)) || !inside) report.certified = false;
  };
  for (std::size_t j = 1; j + 1 < spec.partition.size(); ++j) {
    const HyperReal a = lift(spec.partition[j], order);
    sample(a - g.delta(), spec.values[j - 1]);
    sample(a, (spec.values[j - 1] + spec.values[j]) / 2);
    sample(a + g.delta(), spec.values[j]);
  }
  return report;
}

void VectorGlue::add(const GlueFunction& g) {
  components_.push_back([g](const HyperReal& x) { return g.eval(x); });
}

void VectorGlue::add(Component f) { components_.push_back(std::move(f)); }

std::vector<HyperReal> VectorGlue::eval(const HyperReal& x) const {
  std::vector<HyperReal> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c(x));
  return out;
}

}  // namespace ulab::glue
