#pragma once

#include "ulab/logic/formula.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ulab::logic {

using Mask = std::uint32_t;

/// A set operator on the subsets of a finite formula universe (at most 20 members),
/// tabulated as one image mask per subset mask.
class OperatorTable {
 public:
  static constexpr std::size_t kMaxUniverse = 20;

  /// Throws InvalidArgument for oversized universes or images outside it.
  OperatorTable(std::vector<Formula> universe, std::vector<Mask> images);

  static OperatorTable from_function(std::vector<Formula> universe, const std::function<Mask(Mask)>& op);
  static OperatorTable identity(std::vector<Formula> universe);
  /// Gamma -> closure(Gamma) restricted to the universe.
  static OperatorTable from_closure(std::vector<Formula> universe);

  const std::vector<Formula>& universe() const { return universe_; }
  Mask full() const { return static_cast<Mask>((std::uint64_t{1} << universe_.size()) - 1); }
  Mask operator()(Mask gamma) const { return images_.at(gamma); }

  Mask mask_of(const FormulaSet& set) const;
  FormulaSet set_of(Mask mask) const;

 private:
  std::vector<Formula> universe_;
  std::vector<Mask> images_;
};

/// The left-ordered conjunctions over every nonempty subset of the atoms,
/// atoms kept in list order: 2^n - 1 formulas.
std::vector<Formula> conjunction_fragment(const std::vector<std::string>& atoms);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::optional<Mask> witness;  ///< a failing Gamma
  std::string detail;
};

struct OperatorReport {
  std::vector<AxiomCheck> checks;
  std::size_t subsets_checked = 0;
  bool all_pass() const;
  std::string str(const OperatorTable& op) const;
};

/// Extensive, idempotent, monotone, and finitary: every image is the union
/// of images of subsets with at most `finitary_bound` members.
OperatorReport verify_operator_axioms(const OperatorTable& op, std::size_t finitary_bound = 1);

struct ContinuityResult {
  bool holds = true;
  std::optional<std::pair<Mask, Mask>> witness;  ///< (B, A) with B within A but C(B) not within C(A)
};

/// For all B within A within the universe: C(B) within C(A).
ContinuityResult continuity_shadow(const OperatorTable& op);

}  // namespace ulab::logic
