#pragma once

#include "ulab/glue/glue.hpp"

#include <functional>
#include <set>
#include <vector>

namespace ulab::glue {

struct Partition1D {
  std::vector<Rational> points;  ///< nondecreasing, first a, last T
  Rational mesh;
};

/// a, a + dt, ..., a + n dt with n maximal such that a + n dt <= T, then T.
/// The last cell may be degenerate. Throws InvalidArgument unless a < T and dt > 0.
Partition1D special_partition(const Rational& a, const Rational& T, const Rational& dt);

/// a, one point per nondegenerate cell (its midpoint, nudged by len/7 steps while
/// it sits in `avoid`), then T. Consecutive selections are less than 3 mesh apart.
/// Throws AvoidSetBlocksEndpoints if a or T is avoided.
std::vector<Rational> avoiding_refinement(const Partition1D& p, const std::set<Rational>& avoid);

struct TelescopeReport {
  std::vector<HyperReal> increments;
  HyperReal total;
  HyperReal endpoint_difference;
  bool identity_holds = false;
  HyperReal max_increment;  ///< largest absolute increment
  Rational max_gap;
};

using Evaluable = std::function<HyperReal(const HyperReal&)>;

/// Increments fn(p[i+1]) - fn(p[i]) and their sum against fn(last) - fn(first).
TelescopeReport telescope(const Evaluable& fn, const std::vector<Rational>& points);

struct ResolvedInterval {
  Rational low;
  Rational high;
  Rational increment;
};

/// Increments of the step function over consecutive selection points.
/// Throws SelectionHitsDiscontinuity when a point is an interior partition point.
std::vector<ResolvedInterval> resolving_process(const StepSpec& q, const std::vector<Rational>& selection);

}  // namespace ulab::glue
