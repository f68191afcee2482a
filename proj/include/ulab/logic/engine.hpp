#pragma once

#include "ulab/logic/formula.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ulab::logic {

/// Schema id 1..4 when f instantiates
///   1: (A & B) -> A          2: (A & B) -> B
///   3: A & (B & C) -> (A & B) & C
///   4: (A & B) & C -> A & (B & C)
std::optional<int> is_axiom(const Formula& f);

/// Least superset of gamma closed under the conjunction rules (schemas 1-4 with
/// modus ponens) and modus ponens on members. Axiom instances are not listed
/// unless they are in gamma.
FormulaSet closure(const FormulaSet& gamma);

/// Membership in the full consequence set: closure or an axiom instance.
bool member(const Formula& x, const FormulaSet& gamma);

/// (((a0 & a1) & a2) & ...). Throws TooFewAtoms, DuplicateAtom, or InvalidArgument for non-atoms.
Formula make_ultraword(const std::vector<Formula>& atoms);

/// Left-ordered conjunction of witnesses; repeats allowed. Throws TooFewAtoms.
Formula ultimate_witness(const std::vector<Formula>& witnesses);

struct Justification {
  enum class Kind { hypothesis, axiom, modus_ponens };
  Kind kind = Kind::hypothesis;
  int schema = 0;           ///< axiom steps
  std::size_t premise = 0;  ///< modus ponens: step holding P
  std::size_t rule = 0;     ///< modus ponens: step holding P -> Q
};

struct ProofStep {
  Formula formula;
  Justification why;
};

struct ProofTrace {
  std::vector<ProofStep> steps;
  std::string str() const;
};

/// Demonstration from {w} that reaches every atom of w, in order.
/// Throws NotAnUltraword unless w is a left-ordered conjunction of distinct atoms.
ProofTrace unfold(const Formula& w);

/// Throws NotAnUltraword unless w is a left-ordered conjunction of distinct atoms.
void require_ultraword(const Formula& w);

struct Characterization {
  Formula ultraword;
  FormulaSet q_set;    ///< derived conjunctions
  FormulaSet d_prime;  ///< derived atoms
  bool disjoint = false;         ///< axiom instances, q_set, d_prime share nothing
  bool contains_ultraword = false;
  bool atoms_covered = false;    ///< atoms of q_set are exactly d_prime

  bool in_axioms(const Formula& f) const { return is_axiom(f).has_value(); }
  bool consistent() const { return disjoint && contains_ultraword && atoms_covered; }
};

Characterization characterize(const Formula& w);

/// Truth-table evaluation; atoms missing from the assignment are false.
bool evaluate(const Formula& f, const std::map<std::string, bool>& assignment);
/// gamma |= x over the listed atoms.
bool classical_consequence(const FormulaSet& gamma, const Formula& x, const std::vector<std::string>& atoms);

struct ClassicalReport {
  std::size_t derived_checked = 0;
  std::optional<Formula> unsound;         ///< derived but not a classical consequence
  std::size_t axioms_checked = 0;
  std::optional<Formula> non_tautology;   ///< an axiom instance failing the truth table
  std::optional<Formula> strict_witness;  ///< classical consequence outside the system
  bool sound() const { return !unsound && !non_tautology; }
  bool strict() const { return strict_witness.has_value(); }
};

/// Soundness of closure(gamma) and of atom-level axiom instances against truth
/// tables, plus a classical consequence the system does not derive.
/// Throws InvalidArgument beyond five atoms or when gamma uses an unlisted atom.
ClassicalReport classical_compare(const FormulaSet& gamma, std::vector<std::string> atoms);

}  // namespace ulab::logic
