#include "ulab/glue/partition.hpp"

#include "ulab/error.hpp"

namespace ulab::glue {

using hyper::Scalar;

Partition1D special_partition(const Rational& a, const Rational& T, const Rational& dt) {
  if (!(a < T)) fail(Errc::InvalidArgument, "special partition needs a < T");
  if (dt <= 0) fail(Errc::InvalidArgument, "special partition needs dt > 0");
  const hyper::BigInt n = hyper::floor_of((T - a) / dt);
  Partition1D p;
  p.mesh = dt;
  for (hyper::BigInt i = 0; i <= n; ++i) p.points.push_back(a + Rational(i) * dt);
  p.points.push_back(T);
  return p;
}

std::vector<Rational> avoiding_refinement(const Partition1D& p, const std::set<Rational>& avoid) {
  if (p.points.size() < 2) fail(Errc::InvalidArgument, "partition has fewer than two points");
  const Rational& a = p.points.front();
  const Rational& T = p.points.back();
  if (avoid.count(a) || avoid.count(T)) fail(Errc::AvoidSetBlocksEndpoints, "an endpoint is in the avoid set");

  std::vector<Rational> selection{a};
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    const Rational lo = p.points[i];
    const Rational len = p.points[i + 1] - lo;
    if (len == 0) continue;
    const Rational mid = lo + len / 2;
    Rational pick = mid;
    // offsets k*len/(7*2^r) stay inside the cell and eventually escape any finite set
    for (unsigned r = 0; avoid.count(pick); ++r) {
      const Rational step = len / Rational(7 * (hyper::BigInt(1) << r));
      bool found = false;
      for (int k = 1; k <= 3 && !found; ++k)
        for (int sign : {1, -1}) {
          const Rational candidate = mid + Rational(sign * k) * step;
          if (!avoid.count(candidate)) {
            pick = candidate;
            found = true;
            break;
          }
        }
    }
    selection.push_back(pick);
  }
  selection.push_back(T);
  return selection;
}

TelescopeReport telescope(const Evaluable& fn, const std::vector<Rational>& points) {
  if (points.size() < 2) fail(Errc::InvalidArgument, "telescoping needs at least two points");
  TelescopeReport report;
  std::vector<HyperReal> values;
  values.reserve(points.size());
  for (const auto& t : points) values.push_back(fn(HyperReal(Scalar(t))));
  report.total = HyperReal(0, values.front().order());
  report.max_increment = report.total;
  report.max_gap = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    HyperReal inc = values[i + 1] - values[i];
    report.total += inc;
    const HyperReal magnitude = inc.sign() < 0 ? -inc : inc;
    if (magnitude > report.max_increment) report.max_increment = magnitude;
    report.max_gap = std::max<Rational>(report.max_gap, points[i + 1] - points[i]);
    report.increments.push_back(std::move(inc));
  }
  report.endpoint_difference = values.back() - values.front();
  report.identity_holds = report.total == report.endpoint_difference;
  return report;
}

std::vector<ResolvedInterval> resolving_process(const StepSpec& q, const std::vector<Rational>& selection) {
  q.validate();
  for (const auto& t : selection)
    for (std::size_t j = 1; j + 1 < q.partition.size(); ++j)
      if (t == q.partition[j])
        fail(Errc::SelectionHitsDiscontinuity, "selection point " + hyper::rational_str(t) + " is a discontinuity");
  std::vector<ResolvedInterval> out;
  for (std::size_t i = 0; i + 1 < selection.size(); ++i)
    out.push_back({selection[i], selection[i + 1], q.step_value(selection[i + 1]) - q.step_value(selection[i])});
  return out;
}

}  // namespace ulab::glue
