#pragma once

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ulab::om {

using Element = std::size_t;

/// A finite bounded lattice with orthocomplement, given by explicit tables.
class OrthoLattice {
 public:
  /// Throws MalformedTable when a table has the wrong shape or an entry out of range.
  OrthoLattice(std::vector<std::string> names, std::vector<std::vector<Element>> meet,
               std::vector<std::vector<Element>> join, std::vector<Element> ortho, Element bottom, Element top);

  /// The Boolean algebra of subsets of an n-set, n in [0, 3]; element k is the subset with bitmask k.
  static OrthoLattice boolean(unsigned n);
  /// The six-element orthomodular lattice 0, a, a', b, b', 1.
  static OrthoLattice mo2();
  static OrthoLattice from_json(const nlohmann::json& j);
  static OrthoLattice load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(const std::string& name) const;

  Element meet(Element a, Element b) const { return meet_[a][b]; }
  Element join(Element a, Element b) const { return join_[a][b]; }
  Element ortho(Element a) const { return ortho_[a]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  bool leq(Element a, Element b) const { return meet(a, b) == a; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> meet_;
  std::vector<std::vector<Element>> join_;
  std::vector<Element> ortho_;
  Element bottom_;
  Element top_;
};

struct Violation {
  std::string law;
  std::vector<Element> elements;
  std::string str(const OrthoLattice& l) const;
};

/// Lattice laws, bounds, involution, complementation, De Morgan and the
/// orthomodular law, checked exhaustively. Returns the first violation.
std::optional<Violation> validate_orthomodular(const OrthoLattice& l);

/// a' v (a ^ b)
Element mittelstaedt(const OrthoLattice& l, Element a, Element b);

struct SchemaResult {
  int schema = 0;
  bool valid = true;
  std::size_t assignments = 0;
  std::vector<Element> counterexample;  ///< values for A, B, C
};

/// Whether the schema's conditional translation equals top for every
/// assignment of A, B, C. Throws InvalidArgument for schemas outside 1..4.
SchemaResult axiom_validity(const OrthoLattice& l, int schema);

}  // namespace ulab::om
