#include "ulab/logic/engine.hpp"

#include "ulab/error.hpp"

#include <deque>
#include <sstream>

namespace ulab::logic {

std::optional<int> is_axiom(const Formula& f) {
  if (!f.is_impl() || !f.left().is_conj()) return std::nullopt;
  const Formula& lhs = f.left();
  const Formula& rhs = f.right();
  if (lhs.left() == rhs) return 1;
  if (lhs.right() == rhs) return 2;
  if (!rhs.is_conj()) return std::nullopt;
  // A & (B & C) -> (A & B) & C
  if (lhs.right().is_conj() && rhs.left().is_conj() && lhs.left() == rhs.left().left() &&
      lhs.right().left() == rhs.left().right() && lhs.right().right() == rhs.right())
    return 3;
  // (A & B) & C -> A & (B & C)
  if (lhs.left().is_conj() && rhs.right().is_conj() && lhs.left().left() == rhs.left() &&
      lhs.left().right() == rhs.right().left() && lhs.right() == rhs.right().right())
    return 4;
  return std::nullopt;
}

FormulaSet closure(const FormulaSet& gamma) {
  FormulaSet derived;
  std::deque<Formula> pending;
  std::multimap<Formula, Formula> waiting;  // antecedent -> consequent of member implications

  auto add = [&](const Formula& f) {
    if (derived.insert(f).second) pending.push_back(f);
  };
  for (const auto& f : gamma) add(f);

  while (!pending.empty()) {
    const Formula x = pending.front();
    pending.pop_front();
    if (x.is_conj()) {
      add(x.left());
      add(x.right());
      if (x.left().is_conj()) add(Formula::conj(x.left().left(), Formula::conj(x.left().right(), x.right())));
      if (x.right().is_conj()) add(Formula::conj(Formula::conj(x.left(), x.right().left()), x.right().right()));
    } else if (x.is_impl()) {
      if (derived.count(x.left()) || is_axiom(x.left())) add(x.right());
      else waiting.emplace(x.left(), x.right());
    }
    auto [lo, hi] = waiting.equal_range(x);
    for (auto it = lo; it != hi; ++it) add(it->second);
    waiting.erase(lo, hi);
  }
  return derived;
}

bool member(const Formula& x, const FormulaSet& gamma) {
  return is_axiom(x).has_value() || closure(gamma).count(x) > 0;
}

Formula make_ultraword(const std::vector<Formula>& atoms) {
  if (atoms.size() < 2) fail(Errc::TooFewAtoms, "an ultraword needs at least two atoms");
  FormulaSet seen;
  for (const auto& a : atoms) {
    if (!a.is_atom()) fail(Errc::InvalidArgument, "'" + a.str() + "' is not an atom");
    if (!seen.insert(a).second) fail(Errc::DuplicateAtom, "atom '" + a.str() + "' repeats");
  }
  return left_conjunction(atoms);
}

Formula ultimate_witness(const std::vector<Formula>& witnesses) {
  if (witnesses.size() < 2) fail(Errc::TooFewAtoms, "an ultimate witness needs at least two witnesses");
  return left_conjunction(witnesses);
}

void require_ultraword(const Formula& w) {
  if (!is_left_ordered(w)) fail(Errc::NotAnUltraword, "'" + w.str() + "' is not a left-ordered conjunction");
  FormulaSet seen;
  for (const auto& leaf : conjuncts(w)) {
    if (!leaf.is_atom()) fail(Errc::NotAnUltraword, "'" + leaf.str() + "' is not an atom");
    if (!seen.insert(leaf).second) fail(Errc::NotAnUltraword, "atom '" + leaf.str() + "' repeats");
  }
}

ProofTrace unfold(const Formula& w) {
  require_ultraword(w);
  ProofTrace trace;
  auto push = [&](Formula f, Justification why) {
    trace.steps.push_back({std::move(f), why});
    return trace.steps.size() - 1;
  };
  auto axiom = [&](Formula f) {
    const int schema = is_axiom(f).value();
    return push(std::move(f), {Justification::Kind::axiom, schema, 0, 0});
  };
  auto mp = [&](std::size_t premise, std::size_t rule) {
    return push(trace.steps[rule].formula.right(), {Justification::Kind::modus_ponens, 0, premise, rule});
  };

  // prefixes[k] = x0 & ... & xk, stepped down from the hypothesis
  const std::vector<Formula> leaves = conjuncts(w);
  const std::size_t n = leaves.size() - 1;
  std::vector<std::size_t> prefix_step(n + 1);
  prefix_step[n] = push(w, {});
  for (std::size_t k = n; k >= 2; --k) {
    const Formula wk = trace.steps[prefix_step[k]].formula;
    prefix_step[k - 1] = mp(prefix_step[k], axiom(Formula::impl(wk, wk.left())));
  }
  const Formula w1 = trace.steps[prefix_step[1]].formula;
  mp(prefix_step[1], axiom(Formula::impl(w1, w1.left())));
  mp(prefix_step[1], axiom(Formula::impl(w1, w1.right())));
  for (std::size_t k = 2; k <= n; ++k) {
    const Formula wk = trace.steps[prefix_step[k]].formula;
    mp(prefix_step[k], axiom(Formula::impl(wk, wk.right())));
  }
  return trace;
}

std::string ProofTrace::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << i + 1 << ". " << steps[i].formula.str() << "    ";
    const auto& why = steps[i].why;
    switch (why.kind) {
      case Justification::Kind::hypothesis: out << "hyp"; break;
      case Justification::Kind::axiom: out << "ax" << why.schema; break;
      case Justification::Kind::modus_ponens: out << "MP " << why.premise + 1 << "," << why.rule + 1; break;
    }
    out << "\n";
  }
  return out.str();
}

Characterization characterize(const Formula& w) {
  require_ultraword(w);
  Characterization c{w, {}, {}};
  for (const auto& f : closure({w})) {
    if (f.is_atom()) c.d_prime.insert(f);
    else if (f.is_conj()) c.q_set.insert(f);
  }
  c.disjoint = true;
  for (const auto& f : c.q_set)
    if (c.in_axioms(f) || c.d_prime.count(f)) c.disjoint = false;
  for (const auto& f : c.d_prime)
    if (c.in_axioms(f)) c.disjoint = false;
  c.contains_ultraword = c.q_set.count(w) > 0;
  std::set<std::string> q_atoms;
  for (const auto& f : c.q_set)
    for (const auto& a : f.atoms()) q_atoms.insert(a);
  std::set<std::string> d_atoms;
  for (const auto& f : c.d_prime) d_atoms.insert(f.name());
  c.atoms_covered = q_atoms == d_atoms;
  return c;
}

bool evaluate(const Formula& f, const std::map<std::string, bool>& assignment) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const auto it = assignment.find(f.name());
      return it != assignment.end() && it->second;
    }
    case Formula::Kind::conj: return evaluate(f.left(), assignment) && evaluate(f.right(), assignment);
    case Formula::Kind::impl: return !evaluate(f.left(), assignment) || evaluate(f.right(), assignment);
  }
  return false;
}

bool classical_consequence(const FormulaSet& gamma, const Formula& x, const std::vector<std::string>& atoms) {
  const std::size_t rows = std::size_t{1} << atoms.size();
  for (std::size_t row = 0; row < rows; ++row) {
    std::map<std::string, bool> assignment;
    for (std::size_t i = 0; i < atoms.size(); ++i) assignment[atoms[i]] = (row >> i) & 1U;
    bool premises = true;
    for (const auto& g : gamma) premises = premises && evaluate(g, assignment);
    if (premises && !evaluate(x, assignment)) return false;
  }
  return true;
}

ClassicalReport classical_compare(const FormulaSet& gamma, std::vector<std::string> atoms) {
  if (atoms.size() > 5) fail(Errc::InvalidArgument, "classical comparison is limited to five atoms");
  const std::set<std::string> listed(atoms.begin(), atoms.end());
  for (const auto& g : gamma)
    for (const auto& a : g.atoms())
      if (!listed.count(a)) fail(Errc::InvalidArgument, "atom '" + a + "' is not in the listed universe");
  if (atoms.empty()) atoms.push_back("p");

  ClassicalReport report;
  for (const auto& f : closure(gamma)) {
    ++report.derived_checked;
    if (!report.unsound && !classical_consequence(gamma, f, atoms)) report.unsound = f;
  }

  std::vector<Formula> letters;
  for (const auto& a : atoms) letters.push_back(Formula::atom(a));
  for (const auto& a : letters)
    for (const auto& b : letters) {
      const Formula ab = Formula::conj(a, b);
      for (const Formula& inst : {Formula::impl(ab, a), Formula::impl(ab, b)}) {
        ++report.axioms_checked;
        if (!report.non_tautology && !classical_consequence({}, inst, atoms)) report.non_tautology = inst;
      }
      for (const auto& c : letters) {
        const Formula left_assoc = Formula::conj(ab, c);
        const Formula right_assoc = Formula::conj(a, Formula::conj(b, c));
        for (const Formula& inst : {Formula::impl(right_assoc, left_assoc), Formula::impl(left_assoc, right_assoc)}) {
          ++report.axioms_checked;
          if (!report.non_tautology && !classical_consequence({}, inst, atoms)) report.non_tautology = inst;
        }
      }
    }

  const Formula& p = letters.front();
  for (const Formula& candidate : {Formula::impl(p, p), Formula::impl(p, Formula::conj(p, p))}) {
    if (classical_consequence(gamma, candidate, atoms) && !member(candidate, gamma)) {
      report.strict_witness = candidate;
      break;
    }
  }
  return report;
}

}  // namespace ulab::logic
