#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace ulab::verify {

using logic::Formula;
using logic::FormulaSet;

namespace {

// Schema patterns over metavariables written ?A, ?B, ?C.
const std::vector<Formula>& schema_patterns() {
  static const std::vector<Formula> patterns = [] {
    const Formula a = Formula::atom("?A"), b = Formula::atom("?B"), c = Formula::atom("?C");
    return std::vector<Formula>{
        Formula::impl(Formula::conj(a, b), a),
        Formula::impl(Formula::conj(a, b), b),
        Formula::impl(Formula::conj(a, Formula::conj(b, c)), Formula::conj(Formula::conj(a, b), c)),
        Formula::impl(Formula::conj(Formula::conj(a, b), c), Formula::conj(a, Formula::conj(b, c))),
    };
  }();
  return patterns;
}

bool unify(const Formula& pattern, const Formula& f, std::map<std::string, Formula>& binding) {
  if (pattern.is_atom() && pattern.name().front() == '?') {
    const auto [it, inserted] = binding.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (pattern.is_atom()) return pattern.name() == f.name();
  return unify(pattern.left(), f.left(), binding) && unify(pattern.right(), f.right(), binding);
}

// All binary conjunction trees over the given leaf sequence.
std::vector<Formula> trees(const std::vector<Formula>& leaves, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {leaves[lo]};
  std::vector<Formula> out;
  for (std::size_t split = lo + 1; split < hi; ++split)
    for (const auto& l : trees(leaves, lo, split))
      for (const auto& r : trees(leaves, split, hi)) out.push_back(Formula::conj(l, r));
  return out;
}

}  // namespace

std::vector<int> matching_schemas(const Formula& f) {
  std::vector<int> out;
  const auto& patterns = schema_patterns();
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    std::map<std::string, Formula> binding;
    if (unify(patterns[k], f, binding)) out.push_back(static_cast<int>(k + 1));
  }
  return out;
}

ProofSearch::ProofSearch(const std::vector<std::string>& atoms) {
  const std::size_t n = atoms.size();
  // every ordered selection of distinct atoms, every bracketing
  for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (subset >> i & 1U) chosen.push_back(atoms[i]);
    std::sort(chosen.begin(), chosen.end());
    do {
      std::vector<Formula> leaves;
      for (const auto& a : chosen) leaves.push_back(Formula::atom(a));
      for (auto& t : trees(leaves, 0, leaves.size())) universe_.push_back(std::move(t));
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
  successors_.resize(universe_.size());
  for (std::size_t x = 0; x < universe_.size(); ++x) {
    if (!universe_[x].is_conj()) continue;
    for (std::size_t y = 0; y < universe_.size(); ++y)
      if (universe_[y].size() <= universe_[x].size() && !matching_schemas(Formula::impl(universe_[x], universe_[y])).empty())
        successors_[x].push_back(y);
  }
}

FormulaSet ProofSearch::derive(const Formula& w, std::size_t depth) const {
  const auto start = index_.find(w);
  if (start == index_.end()) return {w};
  std::vector<bool> seen(universe_.size(), false);
  std::vector<std::size_t> frontier{start->second};
  seen[start->second] = true;
  for (std::size_t layer = 0; layer < depth && !frontier.empty(); ++layer) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (std::size_t y : successors_[x])
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
        }
    frontier = std::move(next);
  }
  FormulaSet out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (seen[i]) out.insert(universe_[i]);
  return out;
}

TraceVerdict check_trace(const logic::ProofTrace& trace, const Formula& w) {
  TraceVerdict v;
  using Kind = logic::Justification::Kind;
  std::map<Formula, std::size_t> first_conclusion;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    switch (step.why.kind) {
      case Kind::hypothesis:
        if (!(step.formula == w)) {
          v.problem = "step " + std::to_string(i + 1) + " cites a formula outside the hypotheses";
          return v;
        }
        break;
      case Kind::axiom: {
        const auto ids = matching_schemas(step.formula);
        if (std::find(ids.begin(), ids.end(), step.why.schema) == ids.end()) {
          v.problem = "step " + std::to_string(i + 1) + " is not an instance of schema " + std::to_string(step.why.schema);
          return v;
        }
        break;
      }
      case Kind::modus_ponens: {
        if (step.why.premise >= i || step.why.rule >= i) {
          v.problem = "step " + std::to_string(i + 1) + " cites a later step";
          return v;
        }
        const Formula& rule = trace.steps[step.why.rule].formula;
        const Formula expected = Formula::impl(trace.steps[step.why.premise].formula, step.formula);
        if (!(rule == expected)) {
          v.problem = "step " + std::to_string(i + 1) + " misapplies modus ponens";
          return v;
        }
        if (step.formula.is_atom()) first_conclusion.emplace(step.formula, i);
        break;
      }
    }
  }
  v.valid = true;
  const auto leaves = logic::conjuncts(w);
  v.ordered = true;
  for (const auto& leaf : leaves) {
    const auto it = first_conclusion.find(leaf);
    if (it == first_conclusion.end()) {
      v.ordered = false;
      v.problem = "atom " + leaf.str() + " is never concluded";
      return v;
    }
    if (!v.atom_steps.empty() && it->second <= v.atom_steps.back()) v.ordered = false;
    v.atom_steps.push_back(it->second);
  }
  return v;
}

std::uint32_t truth_table(const Formula& f, const std::vector<std::string>& atoms) {
  const std::size_t rows = std::size_t{1} << atoms.size();
  const std::uint32_t all = rows == 32 ? 0xFFFFFFFFU : (1U << rows) - 1;
  std::function<std::uint32_t(const Formula&)> table = [&](const Formula& g) -> std::uint32_t {
    if (g.is_atom()) {
      const auto pos = std::find(atoms.begin(), atoms.end(), g.name()) - atoms.begin();
      std::uint32_t column = 0;
      for (std::size_t row = 0; row < rows; ++row)
        if (static_cast<std::size_t>(pos) < atoms.size() && (row >> pos & 1U)) column |= 1U << row;
      return column;
    }
    const std::uint32_t l = table(g.left()), r = table(g.right());
    return g.is_conj() ? (l & r) : ((~l | r) & all);
  };
  return table(f);
}

bool entails(const FormulaSet& gamma, const Formula& x, const std::vector<std::string>& atoms) {
  const std::size_t rows = std::size_t{1} << atoms.size();
  std::uint32_t premises = rows == 32 ? 0xFFFFFFFFU : (1U << rows) - 1;
  for (const auto& g : gamma) premises &= truth_table(g, atoms);
  return (premises & ~truth_table(x, atoms)) == 0;
}

FloorApproximation floor_approximation(const hyper::BigInt& num, const hyper::BigInt& den, const hyper::BigInt& m) {
  // floor division for den > 0
  auto floor_div = [](const hyper::BigInt& a, const hyper::BigInt& b) {
    hyper::BigInt q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
  };
  FloorApproximation out;
  out.n = floor_div(num, den);
  out.c = floor_div((num - out.n * den) * m, den);
  out.f = m * out.n + out.c;
  return out;
}

namespace {

// arctan(1/k) by its alternating series until the term drops below `eps`
hyper::Rational arctan_inverse(long k, const hyper::Rational& eps) {
  hyper::Rational sum = 0;
  hyper::Rational power(1, k);
  const hyper::Rational k2(k * k);
  for (long n = 0;; ++n) {
    const hyper::Rational term = power / (2 * n + 1);
    if (term < eps) break;
    sum += (n % 2 == 0) ? term : hyper::Rational(-term);
    power /= k2;
  }
  return sum;
}

hyper::Rational ten_to_minus(unsigned digits) {
  hyper::BigInt p = 1;
  for (unsigned i = 0; i < digits; ++i) p *= 10;
  return hyper::Rational(1) / hyper::Rational(p);
}

}  // namespace

hyper::Rational machin_pi(unsigned digits) {
  const hyper::Rational eps = ten_to_minus(digits + 2);
  return 16 * arctan_inverse(5, eps) - 4 * arctan_inverse(239, eps);
}

hyper::Rational taylor_sin(const hyper::Rational& x, unsigned digits) {
  const hyper::Rational eps = ten_to_minus(digits + 2);
  hyper::Rational sum = 0, term = x;
  for (long n = 1; abs(term) >= eps; n += 2) {
    sum += term;
    term = -term * x * x / ((n + 1) * (n + 2));
  }
  return sum;
}

}  // namespace ulab::verify
