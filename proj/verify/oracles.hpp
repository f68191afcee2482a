#pragma once

// Reference implementations used to check the library. They share no code
// with the routines they check beyond the Formula and number types.

#include "ulab/hyper/scalar.hpp"
#include "ulab/logic/engine.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ulab::verify {

/// Generic axiom-schema matcher: unifies f against the four schema patterns
/// with metavariables. Returns every matching schema id.
std::vector<int> matching_schemas(const logic::Formula& f);

/// Bounded forward proof search from {w} over the universe of conjunction
/// trees whose leaves are distinct atoms of w. Each layer applies modus ponens
/// with every axiom instance X -> Y whose antecedent is already derived.
class ProofSearch {
 public:
  explicit ProofSearch(const std::vector<std::string>& atoms);

  std::size_t universe_size() const { return universe_.size(); }
  /// Formulas reachable from {w} in at most `depth` layers (w included).
  logic::FormulaSet derive(const logic::Formula& w, std::size_t depth) const;

 private:
  std::vector<logic::Formula> universe_;
  std::map<logic::Formula, std::size_t> index_;
  std::vector<std::vector<std::size_t>> successors_;  // X -> Y whenever X -> Y is an axiom instance
};

struct TraceVerdict {
  bool valid = false;
  std::string problem;
  std::vector<std::size_t> atom_steps;  ///< step index where each leaf of w is first concluded
  bool ordered = false;                 ///< atom_steps strictly increasing, leaves in order
};

/// Checks every step of a demonstration from {w} and where its atoms appear.
TraceVerdict check_trace(const logic::ProofTrace& trace, const logic::Formula& w);

/// Truth table of f as a bitmask over 2^atoms.size() rows (at most 5 atoms).
std::uint32_t truth_table(const logic::Formula& f, const std::vector<std::string>& atoms);
bool entails(const logic::FormulaSet& gamma, const logic::Formula& x, const std::vector<std::string>& atoms);

struct FloorApproximation {
  hyper::BigInt n;
  hyper::BigInt c;
  hyper::BigInt f;
};

/// n, c, f from integer division alone.
FloorApproximation floor_approximation(const hyper::BigInt& num, const hyper::BigInt& den, const hyper::BigInt& m);

/// pi by Machin's formula in exact rationals, error below 10^-digits.
hyper::Rational machin_pi(unsigned digits);

/// sin(x) by its Taylor series in rationals, error below 10^-digits (|x| <= 2).
hyper::Rational taylor_sin(const hyper::Rational& x, unsigned digits);

}  // namespace ulab::verify
