#include "ulab/logic/operators.hpp"

#include "ulab/error.hpp"
#include "ulab/logic/engine.hpp"

#include <bit>
#include <sstream>

namespace ulab::logic {

OperatorTable::OperatorTable(std::vector<Formula> universe, std::vector<Mask> images)
    : universe_(std::move(universe)), images_(std::move(images)) {
  if (universe_.size() > kMaxUniverse) fail(Errc::InvalidArgument, "operator universe exceeds 20 formulas");
  if (images_.size() != (std::size_t{1} << universe_.size()))
    fail(Errc::InvalidArgument, "operator table needs one image per subset");
  for (Mask m : images_)
    if (m & ~full()) fail(Errc::InvalidArgument, "operator image leaves the universe");
}

OperatorTable OperatorTable::from_function(std::vector<Formula> universe, const std::function<Mask(Mask)>& op) {
  if (universe.size() > kMaxUniverse) fail(Errc::InvalidArgument, "operator universe exceeds 20 formulas");
  std::vector<Mask> images(std::size_t{1} << universe.size());
  for (std::size_t m = 0; m < images.size(); ++m) images[m] = op(static_cast<Mask>(m));
  return OperatorTable(std::move(universe), std::move(images));
}

OperatorTable OperatorTable::identity(std::vector<Formula> universe) {
  return from_function(std::move(universe), [](Mask m) { return m; });
}

OperatorTable OperatorTable::from_closure(std::vector<Formula> universe) {
  const std::vector<Formula> u = universe;
  auto op = [&u](Mask gamma) {
    FormulaSet set;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (gamma >> i & 1U) set.insert(u[i]);
    const FormulaSet image = closure(set);
    Mask out = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (image.count(u[i])) out |= Mask{1} << i;
    return out;
  };
  return from_function(std::move(universe), op);
}

Mask OperatorTable::mask_of(const FormulaSet& set) const {
  Mask out = 0;
  for (const auto& f : set) {
    bool found = false;
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (universe_[i] == f) {
        out |= Mask{1} << i;
        found = true;
      }
    if (!found) fail(Errc::InvalidArgument, "'" + f.str() + "' is outside the operator universe");
  }
  return out;
}

FormulaSet OperatorTable::set_of(Mask mask) const {
  FormulaSet out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (mask >> i & 1U) out.insert(universe_[i]);
  return out;
}

std::vector<Formula> conjunction_fragment(const std::vector<std::string>& atoms) {
  std::vector<Formula> out;
  const std::size_t n = atoms.size();
  // by subset size, then lexicographic on positions
  for (std::size_t size = 1; size <= n; ++size)
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) != size) continue;
      std::vector<Formula> parts;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) parts.push_back(Formula::atom(atoms[i]));
      out.push_back(left_conjunction(parts));
    }
  return out;
}

bool OperatorReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string OperatorReport::str(const OperatorTable& op) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (c.witness) out << " witness Gamma=" << to_string(op.set_of(*c.witness));
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

OperatorReport verify_operator_axioms(const OperatorTable& op, std::size_t finitary_bound) {
  OperatorReport report;
  AxiomCheck extensive, idempotent, monotone, finitary;
  extensive.name = "extensive";
  idempotent.name = "idempotent";
  monotone.name = "monotone";
  finitary.name = "finitary";
  finitary.detail = "supports of size <= " + std::to_string(finitary_bound);
  const Mask full = op.full();
  const std::size_t n = op.universe().size();
  auto flag = [](AxiomCheck& check, Mask gamma) {
    if (check.pass) {
      check.pass = false;
      check.witness = gamma;
    }
  };

  for (Mask gamma = 0;; ++gamma) {
    ++report.subsets_checked;
    const Mask image = op(gamma);
    if ((gamma & ~image) != 0) flag(extensive, gamma);
    if (op(image) != image) flag(idempotent, gamma);
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bigger = gamma | Mask{1} << i;
      if (bigger != gamma && (image & ~op(bigger)) != 0) flag(monotone, gamma);
    }
    Mask covered = 0;
    for (Mask sub = gamma;; sub = (sub - 1) & gamma) {
      if (static_cast<std::size_t>(std::popcount(sub)) <= finitary_bound) covered |= op(sub);
      if (sub == 0) break;
    }
    if (covered != image) flag(finitary, gamma);
    if (gamma == full) break;
  }
  report.checks = {extensive, idempotent, monotone, finitary};
  return report;
}

ContinuityResult continuity_shadow(const OperatorTable& op) {
  ContinuityResult result;
  const Mask full = op.full();
  for (Mask a = 0;; ++a) {
    const Mask image = op(a);
    for (Mask b = a;; b = (b - 1) & a) {
      if ((op(b) & ~image) != 0) {
        result.holds = false;
        result.witness = {b, a};
        return result;
      }
      if (b == 0) break;
    }
    if (a == full) break;
  }
  return result;
}

}  // namespace ulab::logic
