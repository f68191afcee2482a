#pragma once

#include "ulab/hyper/kernel.hpp"

#include "json.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ulab::glue {

using hyper::HyperReal;
using hyper::Rational;

/// A step function: value values[k] on [partition[k], partition[k+1]).
struct StepSpec {
  std::vector<Rational> partition;  ///< a_0 < a_1 < ... < a_{n+1}
  std::vector<Rational> values;     ///< r_1 ... r_{n+1}

  /// Throws InvalidArgument unless n >= 1, the partition increases and sizes agree.
  void validate() const;
  Rational min_gap() const;
  /// g(x) on [a_0, a_{n+1}]; interior partition points take the right-hand value.
  Rational step_value(const Rational& x) const;

  /// Partition {0, 1, 2} with values {2, 3}.
  static StepSpec neutron();
};

/// Where a point sits relative to the transitions [a_j - delta, a_j + delta].
struct Region {
  enum class Kind { piece, transition, left_boundary, right_boundary };
  Kind kind = Kind::piece;
  std::size_t index = 0;  ///< piece k, or interior partition index j for transitions
};

/// The smoothed step: constant on pieces, a half sine wave across each transition.
class GlueFunction {
 public:
  /// delta must be a positive standard rational or a positive infinitesimal.
  /// Throws NonPositiveDelta, OverlappingTransitions (2*delta >= min gap), InvalidArgument.
  GlueFunction(StepSpec spec, HyperReal delta);

  static GlueFunction from_json(const nlohmann::json& j);
  static GlueFunction load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const StepSpec& spec() const { return spec_; }
  const HyperReal& delta() const { return delta_; }
  bool standard_mode() const { return delta_.is_standard(); }

  /// Throws OutOfDomain outside [a_0, a_{n+1}].
  Region locate(const HyperReal& x) const;
  HyperReal eval(const HyperReal& x) const;
  /// m-th derivative. Boundary points a_j +- delta give 0 for odd m and the
  /// transition-side value for even m.
  HyperReal derivative(int m, const HyperReal& x) const;

  /// st(G(x)) for standard x off the interior partition points. Throws OnPartitionPoint.
  hyper::Scalar st_restrict(const Rational& x) const;

  /// max_j pi |r_{j+1} - r_j| / (4 delta), the supremum of |G'|.
  HyperReal derivative_bound() const;

 private:
  HyperReal transition_u(std::size_t j, const HyperReal& x) const;
  Rational jump(std::size_t j) const { return spec_.values[j] - spec_.values[j - 1]; }

  StepSpec spec_;
  HyperReal delta_;
};

struct RangeReport {
  Rational low;
  Rational high;
  bool certified = true;
  std::vector<std::string> samples;  ///< "x -> G(x)" at a_j - delta, a_j, a_j + delta
};

/// [min r, max r], certified by the endpoint and midpoint values of every transition.
RangeReport range_check(const GlueFunction& g);

/// Componentwise evaluation of several glue functions and standard smooth functions.
class VectorGlue {
 public:
  using Component = std::function<HyperReal(const HyperReal&)>;

  void add(const GlueFunction& g);
  void add(Component f);
  std::vector<HyperReal> eval(const HyperReal& x) const;
  std::size_t size() const { return components_.size(); }

 private:
  std::vector<Component> components_;
};

}  // namespace ulab::glue
