#include "support.hpp"

#include "oracles.hpp"
#include "ulab/logic/engine.hpp"
#include "ulab/logic/operators.hpp"

#include <bit>
#include <random>

namespace {

using namespace ulab;
using namespace ulab::logic;

Formula f(std::string_view text) { return parse_formula(text); }

FormulaSet set(std::initializer_list<std::string_view> texts) {
  FormulaSet out;
  for (auto t : texts) out.insert(f(t));
  return out;
}

std::vector<Formula> atoms(std::initializer_list<std::string> names) {
  std::vector<Formula> out;
  for (const auto& n : names) out.push_back(Formula::atom(n));
  return out;
}

TEST(Formula, ParseAndPrint) {
  EXPECT_EQ(f("a & b & c").str(), "a & b & c");
  EXPECT_EQ(f("(a & b) & c"), f("a & b & c"));
  EXPECT_EQ(f("a & (b & c)").str(), "a & (b & c)");
  EXPECT_EQ(f("a -> b -> c"), f("a -> (b -> c)"));
  EXPECT_EQ(f("a & b -> a").str(), "a & b -> a");
  EXPECT_EQ(f("(a -> b) & c").str(), "(a -> b) & c");
  EXPECT_EQ(f("F0' & x_1").atom_sequence(), (std::vector<std::string>{"F0'", "x_1"}));
  EXPECT_ERRC(f("a &"), Errc::ParseError);
  EXPECT_ERRC(f("(a"), Errc::ParseError);
  EXPECT_ERRC(f("a b"), Errc::ParseError);
}

TEST(Formula, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  std::function<Formula(int)> random = [&](int depth) {
    if (depth == 0 || rng() % 3 == 0) return Formula::atom(std::string(1, static_cast<char>('a' + rng() % 4)));
    const Formula l = random(depth - 1);
    const Formula r = random(depth - 1);
    return rng() % 2 ? Formula::conj(l, r) : Formula::impl(l, r);
  };
  for (int i = 0; i < 300; ++i) {
    const Formula x = random(4);
    EXPECT_EQ(parse_formula(x.str()), x) << x.str();
  }
}

TEST(IsAxiom, Schemata) {
  EXPECT_EQ(is_axiom(f("a & b -> a")), 1);
  EXPECT_EQ(is_axiom(f("a & b -> b")), 2);
  EXPECT_EQ(is_axiom(f("a & (b & c) -> a & b & c")), 3);
  EXPECT_EQ(is_axiom(f("a & b & c -> a & (b & c)")), 4);
  EXPECT_FALSE(is_axiom(f("a -> a")).has_value());
  EXPECT_FALSE(is_axiom(f("a & b -> c")).has_value());
  EXPECT_EQ(is_axiom(f("(p -> q) & r -> (p -> q)")), 1);
}

TEST(IsAxiom, AgreesWithUnificationOracle) {
  std::mt19937_64 rng(17);
  std::function<Formula(int)> random = [&](int depth) {
    if (depth == 0 || rng() % 4 == 0) return Formula::atom(std::string(1, static_cast<char>('a' + rng() % 3)));
    const Formula l = random(depth - 1);
    const Formula r = random(depth - 1);
    return rng() % 3 ? Formula::conj(l, r) : Formula::impl(l, r);
  };
  int hits = 0;
  for (int i = 0; i < 3000; ++i) {
    // bias toward axiom shapes
    const Formula x = random(2);
    const Formula y = random(2);
    const Formula z = random(2);
    const std::vector<Formula> candidates{
        Formula::impl(Formula::conj(x, y), rng() % 2 ? x : y),
        Formula::impl(Formula::conj(x, Formula::conj(y, z)), Formula::conj(Formula::conj(x, y), rng() % 2 ? z : x)),
        Formula::impl(Formula::conj(Formula::conj(x, y), z), Formula::conj(x, Formula::conj(y, z))),
        random(4)};
    for (const auto& c : candidates) {
      const auto ours = is_axiom(c);
      const auto oracle = verify::matching_schemas(c);
      ASSERT_EQ(ours.has_value(), !oracle.empty()) << c.str();
      if (ours) {
        ++hits;
        EXPECT_NE(std::find(oracle.begin(), oracle.end(), *ours), oracle.end()) << c.str();
      }
    }
  }
  EXPECT_GT(hits, 1000);
}

TEST(Closure, Examples) {
  EXPECT_EQ(closure(set({"F0 & F1 & F2"})),
            set({"F0 & F1 & F2", "F0 & (F1 & F2)", "F0 & F1", "F1 & F2", "F0", "F1", "F2"}));
  EXPECT_EQ(closure(set({"F0"})), set({"F0"}));
  EXPECT_FALSE(closure(set({"F0 & F1 & F2"})).contains(f("F0 & F2")));
  EXPECT_TRUE(closure({}).empty());
}

TEST(Closure, ModusPonensBetweenHypotheses) {
  EXPECT_TRUE(closure(set({"a", "a -> b", "b -> c"})).contains(f("c")));
  EXPECT_EQ(closure(set({"a -> b"})), set({"a -> b"}));
  EXPECT_TRUE(closure(set({"a & b -> c", "a & b"})).contains(f("c")));
  // antecedent is an axiom instance, so the rule fires with nothing else derived
  EXPECT_TRUE(closure(set({"(a & b -> a) -> d"})).contains(f("d")));
  // hypothesis arrives after the rule that needs it
  EXPECT_TRUE(closure(set({"c -> d", "a & c"})).contains(f("d")));
}

TEST(Closure, MatchesProofSearchOnExamples) {
  const verify::ProofSearch search({"F0", "F1", "F2"});
  const Formula w = f("F0 & F1 & F2");
  EXPECT_EQ(closure({w}), search.derive(w, 8));
}

TEST(Member, IncludesAxiomInstances) {
  EXPECT_TRUE(member(f("a & b -> a"), {}));
  EXPECT_TRUE(member(f("F1"), set({"F0 & F1 & F2"})));
  EXPECT_FALSE(member(f("F3"), set({"F0 & F1 & F2"})));
  EXPECT_FALSE(member(f("a -> a"), {}));
}

// Exhaustive over subsets of the left-ordered conjunction fragment on three
// atoms, plus a handful of implications between fragment members.
std::vector<FormulaSet> small_gammas() {
  auto universe = conjunction_fragment({"a", "b", "c"});
  universe.push_back(f("a -> d"));
  universe.push_back(f("a & b -> c & d"));
  std::vector<FormulaSet> out;
  for (std::uint32_t mask = 0; mask < (1U << universe.size()); ++mask) {
    if (std::popcount(mask) > 4) continue;
    FormulaSet g;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1U) g.insert(universe[i]);
    out.push_back(g);
  }
  return out;
}

TEST(ClosureProperties, ExtensiveAndIdempotent) {
  for (const auto& gamma : small_gammas()) {
    const auto c = closure(gamma);
    for (const auto& x : gamma) ASSERT_TRUE(c.contains(x)) << to_string(gamma);
    FormulaSet again = c;
    again.insert(gamma.begin(), gamma.end());
    ASSERT_EQ(closure(again), c) << to_string(gamma);
  }
}

TEST(ClosureProperties, MonotoneUnderAddition) {
  const auto gammas = small_gammas();
  const auto extra = f("b & c & d");
  for (const auto& gamma : gammas) {
    FormulaSet bigger = gamma;
    bigger.insert(extra);
    const auto small = closure(gamma);
    const auto large = closure(bigger);
    for (const auto& x : small) ASSERT_TRUE(large.contains(x)) << to_string(gamma);
  }
}

TEST(ClosureProperties, FinitaryForConjunctions) {
  const auto universe = conjunction_fragment({"a", "b", "c", "d"});
  for (std::uint32_t mask = 1; mask < (1U << universe.size()); mask += 37) {
    FormulaSet gamma;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1U) gamma.insert(universe[i]);
    FormulaSet joined;
    for (const auto& x : gamma) {
      const auto part = closure({x});
      joined.insert(part.begin(), part.end());
    }
    ASSERT_EQ(closure(gamma), joined) << to_string(gamma);
  }
}

TEST(ClosureProperties, SoundAgainstTruthTables) {
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (const auto& gamma : small_gammas())
    for (const auto& x : closure(gamma)) ASSERT_TRUE(verify::entails(gamma, x, names)) << x.str();
}

TEST(Ultraword, Construction) {
  EXPECT_EQ(make_ultraword(atoms({"F0", "F1"})), f("F0 & F1"));
  const auto w = make_ultraword(atoms({"F0", "F1", "F2"}));
  EXPECT_EQ(w, f("(F0 & F1) & F2"));
  const auto c = closure({w});
  for (const auto& a : atoms({"F0", "F1", "F2"})) EXPECT_TRUE(c.contains(a));
  EXPECT_ERRC(make_ultraword(atoms({"F0", "F0"})), Errc::DuplicateAtom);
  EXPECT_ERRC(make_ultraword(atoms({"F0"})), Errc::TooFewAtoms);
  EXPECT_ERRC(make_ultraword({f("a & b"), f("c")}), Errc::InvalidArgument);
}

TEST(UltimateWitness, Examples) {
  const Formula w1 = f("F0 & F1");
  const Formula w2 = f("F2 & F3");
  const auto w = ultimate_witness({w1, w2});
  EXPECT_EQ(w, Formula::conj(w1, w2));
  const auto c = closure({w});
  for (const auto& x : {w1, w2, f("F0"), f("F1"), f("F2"), f("F3")}) EXPECT_TRUE(c.contains(x)) << x.str();
  EXPECT_NO_THROW(ultimate_witness({w1, w1}));
  EXPECT_ERRC(ultimate_witness({w1}), Errc::TooFewAtoms);
}

TEST(UltimateWitness, AtomsReachableForRandomPairs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Formula> witnesses;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::string> names{"p", "q", "r", "s", "t"};
      std::shuffle(names.begin(), names.end(), rng);
      names.resize(2 + rng() % 3);
      for (auto& n : names) n += std::to_string(k);
      std::vector<Formula> as;
      for (const auto& n : names) as.push_back(Formula::atom(n));
      witnesses.push_back(make_ultraword(as));
    }
    const auto c = closure({ultimate_witness(witnesses)});
    for (const auto& w : witnesses) {
      ASSERT_TRUE(c.contains(w));
      for (const auto& a : w.atom_sequence()) ASSERT_TRUE(c.contains(Formula::atom(a))) << a;
    }
  }
}

TEST(Unfold, TwoAtomPattern) {
  const auto trace = unfold(f("F0 & F1"));
  ASSERT_EQ(trace.steps.size(), 5U);
  using K = Justification::Kind;
  EXPECT_EQ(trace.steps[0].why.kind, K::hypothesis);
  EXPECT_EQ(trace.steps[1].why.kind, K::axiom);
  EXPECT_EQ(trace.steps[1].why.schema, 1);
  EXPECT_EQ(trace.steps[2].why.kind, K::modus_ponens);
  EXPECT_EQ(trace.steps[2].formula, f("F0"));
  EXPECT_EQ(trace.steps[3].why.schema, 2);
  EXPECT_EQ(trace.steps[4].formula, f("F1"));
}

TEST(Unfold, AcceptedByIndependentChecker) {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<Formula> as;
    for (std::size_t i = 0; i < n; ++i) as.push_back(Formula::atom("F" + std::to_string(i)));
    const auto w = make_ultraword(as);
    const auto verdict = verify::check_trace(unfold(w), w);
    EXPECT_TRUE(verdict.valid) << verdict.problem;
    EXPECT_TRUE(verdict.ordered);
    EXPECT_EQ(verdict.atom_steps.size(), n);
  }
  EXPECT_ERRC(unfold(f("F0")), Errc::NotAnUltraword);
  EXPECT_ERRC(unfold(f("F0 & (F1 & F2)")), Errc::NotAnUltraword);
  EXPECT_ERRC(unfold(f("F0 & F1 & F0")), Errc::NotAnUltraword);
}

TEST(Unfold, CheckerRejectsBrokenTraces) {
  const auto w = f("F0 & F1 & F2");
  auto trace = unfold(w);
  auto swapped = trace;
  std::swap(swapped.steps[1], swapped.steps[2]);
  EXPECT_FALSE(verify::check_trace(swapped, w).valid);
  auto bogus = trace;
  bogus.steps.back().formula = f("F3");
  EXPECT_FALSE(verify::check_trace(bogus, w).valid);
}

TEST(Characterize, Examples) {
  const auto c = characterize(f("F0 & F1 & F2"));
  EXPECT_EQ(c.d_prime, set({"F0", "F1", "F2"}));
  EXPECT_EQ(c.q_set, set({"F0 & F1 & F2", "F0 & (F1 & F2)", "F0 & F1", "F1 & F2"}));
  EXPECT_TRUE(c.consistent());
  const auto small = characterize(f("F0 & F1"));
  EXPECT_EQ(small.d_prime, set({"F0", "F1"}));
  EXPECT_EQ(small.q_set, set({"F0 & F1"}));
  for (const auto& q : c.q_set) EXPECT_FALSE(c.in_axioms(q));
  EXPECT_ERRC(characterize(f("a -> b")), Errc::NotAnUltraword);
}

TEST(Characterize, MatchesProofSearchUpToFourAtoms) {
  const std::vector<std::string> names{"a", "b", "c", "d"};
  const verify::ProofSearch search(names);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::string> chosen(names.begin(), names.begin() + static_cast<long>(n));
    do {
      std::vector<Formula> as;
      for (const auto& x : chosen) as.push_back(Formula::atom(x));
      const auto w = make_ultraword(as);
      const auto c = characterize(w);
      FormulaSet ours = c.q_set;
      ours.insert(c.d_prime.begin(), c.d_prime.end());
      EXPECT_EQ(ours, search.derive(w, 2 * n + 4)) << w.str();
      EXPECT_TRUE(c.consistent());
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
}

TEST(OperatorAxioms, ClosureIdentityAndBroken) {
  const auto fragment = conjunction_fragment({"a", "b", "c"});
  EXPECT_EQ(fragment.size(), 7U);
  EXPECT_TRUE(verify_operator_axioms(OperatorTable::from_closure(fragment)).all_pass());
  EXPECT_TRUE(verify_operator_axioms(OperatorTable::identity(fragment)).all_pass());

  const auto dropping = OperatorTable::from_function(fragment, [](Mask m) { return m & (m - 1); });
  const auto report = verify_operator_axioms(dropping);
  EXPECT_FALSE(report.all_pass());
  const auto& ext = report.checks.front();
  EXPECT_EQ(ext.name, "extensive");
  ASSERT_FALSE(ext.pass);
  ASSERT_TRUE(ext.witness.has_value());
  EXPECT_NE(*ext.witness & ~dropping(*ext.witness), 0U);
}

TEST(OperatorAxioms, NonIdempotentTableIsCaught) {
  const auto universe = atoms({"a", "b", "c"});
  // adds the next element only: extensive and monotone, never stable
  const auto creeping = OperatorTable::from_function(universe, [](Mask m) {
    return (m | (m << 1)) & Mask{7};
  });
  const auto report = verify_operator_axioms(creeping);
  bool idempotent_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "idempotent") idempotent_failed = !c.pass && c.witness.has_value();
  EXPECT_TRUE(idempotent_failed) << report.str(creeping);
}

TEST(Classical, SoundAndStrict) {
  const auto report = classical_compare(set({"a & b"}), {"a", "b"});
  EXPECT_TRUE(report.sound());
  EXPECT_TRUE(report.strict());
  EXPECT_GT(report.derived_checked, 0U);
  for (const auto& x : closure(set({"a & b"}))) EXPECT_TRUE(verify::entails(set({"a & b"}), x, {"a", "b"}));

  const auto empty = classical_compare({}, {"a", "b", "c"});
  EXPECT_TRUE(empty.sound());
  EXPECT_GT(empty.axioms_checked, 0U);
  ASSERT_TRUE(empty.strict_witness.has_value());
  EXPECT_FALSE(member(*empty.strict_witness, {}));
  EXPECT_TRUE(verify::entails({}, *empty.strict_witness, {"a", "b", "c"}));
}

TEST(Continuity, Examples) {
  const auto universe = atoms({"a", "b", "c"});
  EXPECT_TRUE(continuity_shadow(OperatorTable::from_closure(universe)).holds);
  EXPECT_TRUE(continuity_shadow(OperatorTable::identity(universe)).holds);
  EXPECT_TRUE(continuity_shadow(OperatorTable::from_closure(conjunction_fragment({"a", "b", "c"}))).holds);
  const auto broken = OperatorTable::from_function(universe, [](Mask m) { return std::popcount(m) == 1 ? m : Mask{0}; });
  const auto r = continuity_shadow(broken);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  const auto [b, a] = *r.witness;
  EXPECT_EQ(b & ~a, 0U);
  EXPECT_NE(broken(b) & ~broken(a), 0U);
}

}  // namespace
