#include "acceptance.hpp"

#include "oracles.hpp"

#include "ulab/error.hpp"
#include "ulab/glue/partition.hpp"
#include "ulab/hyper/expr.hpp"
#include "ulab/hyper/kernel.hpp"
#include "ulab/logic/operators.hpp"
#include "ulab/om/ortho_lattice.hpp"
#include "ulab/subp/subparticle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace ulab::verify {
namespace {

using hyper::BigInt;
using hyper::Decimal;
using hyper::HyperReal;
using hyper::Rational;
using hyper::Scalar;
using logic::Formula;
using logic::FormulaSet;

// Tolerances pinned for decimal coefficients and finite differences.
const Decimal& decimal_tolerance() {
  static const Decimal tol("1e-40");
  return tol;
}
constexpr double kFiniteDifferenceRelTol = 1e-6;
constexpr double kClosureTimeLimitSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

std::vector<std::string> atom_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("F" + std::to_string(i));
  return out;
}

std::vector<Formula> atoms_of(const std::vector<std::string>& names) {
  std::vector<Formula> out;
  for (const auto& n : names) out.push_back(Formula::atom(n));
  return out;
}

bool close_to(const Scalar& value, const Rational& expected) {
  return abs(value.to_decimal() - Decimal(expected)) <= decimal_tolerance();
}

// ---------------------------------------------------------------------------

void closure_characterization(Outcome& out, std::uint64_t) {
  const auto start = std::chrono::steady_clock::now();
  const auto names = atom_names(5);
  const ProofSearch search(names);
  std::size_t checked = 0;
  for (std::uint32_t subset = 0; subset < 32; ++subset) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < 5; ++i)
      if (subset >> i & 1U) chosen.push_back(names[i]);
    if (chosen.size() < 2) continue;
    do {
      const Formula w = logic::make_ultraword(atoms_of(chosen));
      const auto c = logic::characterize(w);
      FormulaSet ours = c.q_set;
      ours.insert(c.d_prime.begin(), c.d_prime.end());
      const FormulaSet oracle = search.derive(w, 2 * chosen.size() + 4);
      out.require(ours == oracle, "closure of " + w.str() + " differs from proof search");
      out.require(c.consistent(), "characterization parts of " + w.str() + " overlap or miss atoms");
      for (const auto& f : ours) out.require(matching_schemas(f).empty(), f.str() + " is an axiom instance");
      ++checked;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < kClosureTimeLimitSeconds, "runtime above 60 s");
  out.detail << checked << " ultrawords, proof-search universe " << search.universe_size();
}

void operator_axioms(Outcome& out, std::uint64_t) {
  const auto op = logic::OperatorTable::from_closure(logic::conjunction_fragment(atom_names(4)));
  const auto report = logic::verify_operator_axioms(op, 1);
  for (const auto& c : report.checks) out.require(c.pass, c.name + " fails");
  out.detail << report.subsets_checked << " subsets of a " << op.universe().size() << "-formula fragment";
}

void quantum_compatibility(Outcome& out, std::uint64_t) {
  const std::vector<std::pair<std::string, om::OrthoLattice>> lattices = {
      {"Boolean-4", om::OrthoLattice::boolean(2)},
      {"Boolean-8", om::OrthoLattice::boolean(3)},
      {"MO2", om::OrthoLattice::mo2()}};
  std::size_t assignments = 0;
  for (const auto& [name, lattice] : lattices) {
    out.require(!om::validate_orthomodular(lattice).has_value(), name + " is not orthomodular");
    for (int schema = 1; schema <= 4; ++schema) {
      const auto r = om::axiom_validity(lattice, schema);
      assignments += r.assignments;
      out.require(r.valid, name + " schema " + std::to_string(schema));
    }
  }
  out.detail << assignments << " assignments";
}

void classical_soundness(Outcome& out, std::uint64_t) {
  const auto names = atom_names(4);
  const auto fragment = logic::conjunction_fragment(names);
  std::size_t derived = 0;
  for (std::uint32_t mask = 0; mask < (1U << fragment.size()); ++mask) {
    FormulaSet gamma;
    for (std::size_t i = 0; i < fragment.size(); ++i)
      if (mask >> i & 1U) gamma.insert(fragment[i]);
    for (const auto& f : logic::closure(gamma)) {
      ++derived;
      if (!entails(gamma, f, names)) {
        out.require(false, f.str() + " is not a classical consequence");
        return;
      }
    }
  }
  const auto report = logic::classical_compare({Formula::conj(Formula::atom("F0"), Formula::atom("F1"))}, {"F0", "F1"});
  out.require(report.sound(), "classical_compare reports an unsound member");
  out.require(report.strict(), "no classical consequence outside the system");
  if (report.strict_witness) {
    const Formula& w = *report.strict_witness;
    out.require(entails({}, w, {"F0", "F1"}) && matching_schemas(w).empty(), "strictness witness is not genuine");
    out.detail << derived << " derived formulas checked; witness " << w.str();
  }
}

// Infinitesimal-mode closed forms on two specs.
void glue_exactness(Outcome& out, std::uint64_t) {
  const Rational pi_oracle = machin_pi(60);
  const std::vector<glue::StepSpec> specs = {glue::StepSpec::neutron(), glue::StepSpec{{0, 1, 3, 4}, {1, 4, -2}}};
  const HyperReal eps = HyperReal::epsilon();
  std::size_t grid_points = 0;
  for (const auto& spec : specs) {
    const glue::GlueFunction g(spec, eps);
    for (std::size_t j = 1; j + 1 < spec.partition.size(); ++j) {
      const Rational jump = spec.values[j] - spec.values[j - 1];
      const HyperReal a(Scalar(spec.partition[j]));
      const HyperReal d1 = g.derivative(1, a);
      out.require(d1.leading_exponent() == -1 && d1.terms().size() == 1, "G'(a_j) is not a pure e^-1 term");
      out.require(close_to(d1.coefficient(-1), pi_oracle * jump / 4), "G'(a_j) coefficient");
      for (const HyperReal& x : {a - eps, a + eps}) {
        out.require(g.derivative(1, x).is_zero(), "G'(a_j +- delta) is not exactly 0");
        out.require(g.derivative(3, x).is_zero(), "G'''(a_j +- delta) is not exactly 0");
        const HyperReal d2 = g.derivative(2, x);
        out.require(d2.leading_exponent() == -2, "G''(a_j +- delta) is not of order e^-2");
        out.require(close_to(abs(d2.coefficient(-2)), abs(jump) * pi_oracle * pi_oracle / 8), "|G''(a_j +- delta)|");
        const HyperReal value = g.eval(x);
        out.require(value.is_exact() && value.is_standard(), "G(a_j +- delta) is not an exact standard value");
      }
    }
    // 100 cell midpoints of a uniform grid, skipping interior partition points
    const Rational lo = spec.partition.front(), hi = spec.partition.back();
    for (int k = 0; k < 100; ++k) {
      const Rational x = lo + (hi - lo) * Rational(2 * k + 1, 200);
      if (std::find(spec.partition.begin() + 1, spec.partition.end() - 1, x) != spec.partition.end() - 1) continue;
      const Scalar st = g.st_restrict(x);
      out.require(st.is_exact() && st.exact() == spec.step_value(x), "st G differs from g");
      ++grid_points;
    }
  }
  out.detail << grid_points << " grid points of D over " << specs.size() << " specs; pi reference from Machin's formula";
}

void derivative_cross_check(Outcome& out, std::uint64_t) {
  const Rational delta0(1, 100);
  const glue::GlueFunction g(glue::StepSpec::neutron(), HyperReal(Scalar(delta0)));
  const HyperReal h(Scalar(delta0 / 1000));
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const Rational x = 1 - delta0 + 2 * delta0 * Rational(k + 1, 21);
    const HyperReal hx{Scalar(x)};
    const Decimal closed = g.derivative(1, hx).coefficient(0).to_decimal();
    const Decimal numeric =
        ((g.eval(hx + h) - g.eval(hx - h)) / (HyperReal(2) * h)).coefficient(0).to_decimal();
    const double rel = static_cast<double>(abs(numeric - closed) / abs(closed));
    worst = std::max(worst, rel);
  }
  out.require(worst < kFiniteDifferenceRelTol, "finite differences disagree");
  out.detail << "20 points, worst relative error " << worst;
}

void telescoping(Outcome& out, std::uint64_t) {
  const Rational delta0(1, 100);
  const glue::GlueFunction g(glue::StepSpec::neutron(), HyperReal(Scalar(delta0)));
  const auto fn = [&g](const HyperReal& x) { return g.eval(x); };
  const auto p = glue::special_partition(0, 2, Rational(1, 10));
  const Decimal sup_derivative = hyper::pi() / (4 * Decimal(delta0));

  const auto grid = glue::telescope(fn, p.points);
  out.require(grid.identity_holds, "grid telescoping identity");
  out.require(grid.total.is_exact() && grid.total == HyperReal(1), "grid total is not exactly 1");
  out.require(grid.max_increment.coefficient(0).to_decimal() <= sup_derivative * Decimal(p.mesh), "grid increment bound");

  const auto selection = glue::avoiding_refinement(p, {Rational(1)});
  out.require(std::find(selection.begin(), selection.end(), Rational(1)) == selection.end(), "selection hits t'=1");
  const auto selected = glue::telescope(fn, selection);
  out.require(selected.identity_holds && selected.total == HyperReal(1), "selection total is not 1");
  out.require(selected.max_increment.coefficient(0).to_decimal() <= sup_derivative * Decimal(selected.max_gap),
              "selection increment bound");
  out.require(selected.max_gap < 3 * p.mesh, "selection gap above 3 mesh");

  const auto resolved = glue::resolving_process(glue::StepSpec::neutron(), selection);
  std::size_t nonzero = 0;
  Rational sum = 0;
  for (const auto& r : resolved) {
    sum += r.increment;
    if (r.increment != 0) ++nonzero;
  }
  out.require(nonzero == 1 && sum == 1, "resolving process does not show a single unit jump");
  out.detail << "grid max increment " << grid.max_increment.str() << ", selection of " << selection.size()
             << " points";
}

void approximation(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> grid(1, 1'000'000'000LL);
  for (int k = 0; k < 1000; ++k) {
    const BigInt p = num(rng), q = den(rng), m = grid(rng);
    const Rational r(p, q);
    const auto a = hyper::approximate_shadow(r, m);
    const auto oracle = floor_approximation(numerator(r), denominator(r), m);
    out.require(a.certified, "gap outside [0, 1/m) for " + hyper::rational_str(r));
    out.require(a.gap >= 0 && a.gap < Rational(1, m) && a.n == oracle.n && a.c == oracle.c && a.f == oracle.f,
                "approximation differs from floor oracle");
  }
  std::uniform_int_distribution<long long> small(0, 1'000'000);
  for (int k = 0; k < 100; ++k) {
    const Rational r(small(rng), small(rng) + 1);
    const auto lambda = hyper::hypernat_for(r);
    const Scalar st = hyper::st(lambda.value() * HyperReal::epsilon());
    out.require(st.is_exact() && st.exact() == r, "st(lambda e) != r");
    out.require((r == 0) == !lambda.is_unlimited(), "lambda unlimited iff r != 0");
  }
  out.detail << "1000 approximations (m up to 1e9), 100 hypernaturals";
}

void subparticle_round_trip(Outcome& out, std::uint64_t seed) {
  subp::Scheme scheme;
  scheme.characteristic_count = 4;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> char_count(1, 4), lambda_dist(1, 6), naming_count(0, 6), pick(1, 30);

  struct Entity {
    std::map<int, BigInt> exponents;
    std::set<BigInt> naming;
    bool operator<(const Entity& o) const { return std::tie(exponents, naming) < std::tie(o.exponents, o.naming); }
  };
  std::map<Entity, BigInt> ids;
  for (int k = 0; k < 100; ++k) {
    Entity e;
    std::vector<int> chars = {1, 2, 3, 4};
    std::shuffle(chars.begin(), chars.end(), rng);
    chars.resize(static_cast<std::size_t>(char_count(rng)));
    for (int i : chars) e.exponents[i] = lambda_dist(rng);
    const int n_naming = naming_count(rng);
    while (static_cast<int>(e.naming.size()) < n_naming) e.naming.insert(scheme.naming_prime(static_cast<std::uint64_t>(pick(rng))));

    // spread the naming primes over the intermediates
    std::vector<std::vector<BigInt>> shares(e.exponents.size());
    std::size_t slot = 0;
    for (const auto& p : e.naming) shares[slot++ % shares.size()].push_back(p);
    std::vector<subp::SubparticleRep> parts;
    slot = 0;
    for (const auto& [i, lambda] : e.exponents) parts.push_back(subp::form_intermediate(scheme, i, lambda, shares[slot++], 1, 8));
    const auto entity = subp::combine(parts);
    const auto value = entity.a1.value(scheme);
    out.require(value.has_value(), "toy identifier has no integer value");
    if (!value) return;

    const auto decoded = subp::decode(scheme, *value);
    std::map<int, BigInt> exponents;
    for (const auto& c : decoded.characteristics) exponents[c.i] = *c.exponent.as_natural();
    std::set<BigInt> naming;
    for (const auto& [p, m] : decoded.naming_primes) {
      naming.insert(p);
      out.require(m == 1, "naming prime repeated");
    }
    out.require(exponents == e.exponents && naming == e.naming, "decode does not recover the entity");
    ids.emplace(e, *value);
  }
  std::set<BigInt> distinct;
  for (const auto& [e, v] : ids) distinct.insert(v);
  out.require(distinct.size() == ids.size(), "two distinct entities share an identifier");

  subp::Scheme two;
  const auto worked = subp::form_intermediate(two, 1, BigInt(4), {5, 7, 11, 13}, 1, 6);
  out.require(worked.a1.value(two) == BigInt(80080), "worked example is not 80080");
  const auto back = subp::decode(two, 80080);
  out.require(back.characteristics.size() == 1 && back.characteristics[0].i == 1 &&
                  *back.characteristics[0].exponent.as_natural() == 4 && back.naming_primes.size() == 4,
              "80080 does not decode to 2^4 * 5 * 7 * 11 * 13");
  out.detail << ids.size() << " distinct entities round-tripped; 80080 reproduced";
}

// Random series with exponents in [lo, hi] and small rational coefficients.
HyperReal random_series(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5), count(1, 3), exponent(lo, hi);
  HyperReal::Terms terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const int c = coeff(rng);
    if (c != 0) terms[exponent(rng)] = Scalar(Rational(c, den(rng)));
  }
  return HyperReal::from_terms(terms);
}

HyperReal random_nonzero(std::mt19937_64& rng, int lo, int hi) {
  for (;;) {
    HyperReal x = random_series(rng, lo, hi);
    if (!x.is_zero()) return x;
  }
}

void kernel_laws(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const HyperReal zero(0), one(1), eps = HyperReal::epsilon();
  std::size_t cases = 0;
  for (int k = 0; k < 1000; ++k, ++cases) {
    const HyperReal x = random_series(rng, -2, 2), y = random_series(rng, -2, 2), z = random_series(rng, -2, 2);
    out.require((x + y) + z == x + (y + z) && x + y == y + x, "addition laws");
    out.require((x * y) * z == x * (y * z) && x * y == y * x, "multiplication laws");
    out.require(x * (y + z) == x * y + x * z, "distributivity");
    out.require(x + zero == x && x * one == x && x + (-x) == zero, "identities and additive inverse");
    const HyperReal b = random_nonzero(rng, 0, 2);
    out.require((x / b) * b == x, "multiplicative inverse");
  }
  std::uniform_int_distribution<int> qnum(1, 1000000), qden(1, 1000000);
  for (int k = 0; k < 1000; ++k, ++cases) {
    const HyperReal x = random_series(rng, -2, 2), y = random_series(rng, -2, 2), z = random_series(rng, -2, 2);
    if (x < y) out.require(x + z < y + z, "order is not translation invariant");
    const int trichotomy = (x < y) + (x == y) + (x > y);
    out.require(trichotomy == 1, "trichotomy");
    const HyperReal q(Scalar(Rational(qnum(rng), qden(rng))));
    out.require(zero < eps && eps < q, "0 < e < q");
  }
  for (int k = 0; k < 1000; ++k, ++cases) {
    const HyperReal x = random_series(rng, 0, 3), y = random_series(rng, 0, 3);
    out.require(hyper::st(x + y) == hyper::st(x) + hyper::st(y), "st is not additive");
    out.require(hyper::st(x * y) == hyper::st(x) * hyper::st(y), "st is not multiplicative");
  }
  const Rational m0(7, 3);
  const auto lambda = hyper::hypernat_for(m0);
  const HyperReal mass = hyper::hypersum_const(lambda, eps);
  out.require(hyper::st(mass) == Scalar(m0), "sum of lambda copies of e has st != m0");
  const HyperReal energy = hyper::hypersum_const(hyper::NatLike(HyperReal::omega() * HyperReal::omega()), eps);
  out.require(energy == HyperReal::omega() && hyper::classify(energy) == hyper::Magnitude::unlimited,
              "sum of Omega^2 copies of e is not the unlimited Omega");
  out.detail << cases << " random cases";
}

void ultrafast_energy(Outcome& out, std::uint64_t seed) {
  const HyperReal eps = HyperReal::epsilon(), omega = HyperReal::omega();
  const HyperReal ke = subp::ultrafast_ke(hyper::pow(eps, 4), omega);
  out.require(ke == HyperReal::monomial(Scalar(Rational(1, 2)), 2), "(1/2) e^4 Omega^2 != e^2/2");
  out.require(hyper::classify(ke) == hyper::Magnitude::infinitesimal, "kinetic energy is not infinitesimal");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  for (int k = 0; k < 20; ++k) {
    const Rational h(num(rng), den(rng));
    const HyperReal m = HyperReal(Scalar(2 * h)) * eps * eps;
    out.require(subp::ultrafast_ke(m, omega) == HyperReal(Scalar(h)), "m = 2h e^2 does not give h");
  }
  out.detail << "e^2/2 and 20 exact energies";
}

void continuity(Outcome& out, std::uint64_t) {
  const auto op = logic::OperatorTable::from_closure(logic::conjunction_fragment(atom_names(3)));
  out.require(logic::continuity_shadow(op).holds, "closure operator fails the monotone-image check");
  const auto atoms = atoms_of(atom_names(3));
  const auto set_op = logic::OperatorTable::from_closure(atoms);
  out.require(logic::continuity_shadow(set_op).holds, "closure on the three atoms fails");
  // keeps singletons, forgets everything larger
  const auto broken = logic::OperatorTable::from_function(atoms, [](logic::Mask m) {
    return std::popcount(m) <= 1 ? m : logic::Mask{0};
  });
  const auto result = logic::continuity_shadow(broken);
  out.require(!result.holds && result.witness.has_value(), "non-monotone table passes");
  if (result.witness) {
    const auto [b, a] = *result.witness;
    out.require((b & ~a) == 0 && (broken(b) & ~broken(a)) != 0, "reported witness is not a violation");
    out.detail << "witness B=" << logic::to_string(broken.set_of(b)) << " A=" << logic::to_string(broken.set_of(a));
  }
}

void trace_ordering(Outcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(2, 8);
  auto names = atom_names(10);
  for (int k = 0; k < 100; ++k) {
    std::shuffle(names.begin(), names.end(), rng);
    const std::vector<std::string> chosen(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(length(rng)));
    const Formula w = logic::make_ultraword(atoms_of(chosen));
    const auto verdict = check_trace(logic::unfold(w), w);
    out.require(verdict.valid, "invalid trace for " + w.str() + ": " + verdict.problem);
    out.require(verdict.ordered, "atoms of " + w.str() + " out of order");
  }
  out.detail << "100 random ultrawords";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&, std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {"closure characterization", closure_characterization},
      {"consequence-operator axioms", operator_axioms},
      {"quantum compatibility", quantum_compatibility},
      {"soundness vs classical consequence", classical_soundness},
      {"glue exactness", glue_exactness},
      {"derivative cross-check", derivative_cross_check},
      {"telescoping", telescoping},
      {"approximation", approximation},
      {"subparticle round trip", subparticle_round_trip},
      {"kernel laws", kernel_laws},
      {"ultrafast kinetic energy", ultrafast_energy},
      {"continuity shadow", continuity},
      {"proof-trace ordering", trace_ordering},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) fail(Errc::InvalidArgument, "criteria are numbered 1.." + std::to_string(kCriterionCount));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(outcome, seed);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = outcome.pass;
  result.detail = outcome.detail.str();
  return result;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream line;
  line << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << "  (" << r.detail
       << ")";
  return line.str();
}

}  // namespace ulab::verify
