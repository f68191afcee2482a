#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ulab::logic {

/// Immutable propositional formula over named atoms with conjunction and implication.
/// Copies share structure.
class Formula {
 public:
  enum class Kind { atom, conj, impl };

  static Formula atom(std::string name);
  static Formula conj(Formula left, Formula right);
  static Formula impl(Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_conj() const { return kind() == Kind::conj; }
  bool is_impl() const { return kind() == Kind::impl; }
  /// Atom name; empty for compound formulas.
  const std::string& name() const { return node_->name; }
  const Formula& left() const;
  const Formula& right() const;

  /// Atoms in left-to-right order of occurrence, repeats kept.
  std::vector<std::string> atom_sequence() const;
  std::set<std::string> atoms() const;
  std::size_t size() const { return node_->size; }

  /// Concrete syntax with minimal parentheses: `&` left-associative, `->` weakest and right-associative.
  std::string str() const;

  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == std::strong_ordering::equal; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t size;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax. Atoms are identifiers [A-Za-z_][A-Za-z0-9_']*.
Formula parse_formula(std::string_view text);

/// Left-ordered conjunction (((f0 & f1) & f2) & ...). Requires a nonempty list.
Formula left_conjunction(const std::vector<Formula>& parts);

/// Maximal non-conjunction subformulas of f, left to right, under any bracketing.
std::vector<Formula> conjuncts(const Formula& f);

/// f is (((x0 & x1) & x2) & ...) with no conjunction in any right operand.
bool is_left_ordered(const Formula& f);

using FormulaSet = std::set<Formula>;

std::string to_string(const FormulaSet& set);

}  // namespace ulab::logic
