#include "commands.hpp"

namespace ulab::cli {
namespace {

const char* const kToyEntity = R"({"mode":"toy","f":2,"characteristics":[{"i":1,"lambda":4}],"naming":{"primes":[5,7,11,13]}})";
const char* const kToyEntity2 = R"({"mode":"toy","f":2,"characteristics":[{"i":2,"lambda":2}],"naming":{"primes":[17]}})";
const char* const kHyperEntity = R"({"mode":"hyper","f":2,"characteristics":[{"i":1,"r":"3/2"}],"naming":{"blocks":[[1,"W"]]}})";
const char* const kLattice =
    R"({"elements":["0","1"],"meet":[["0","0"],["0","1"]],"join":[["0","1"],["1","1"]],"ortho":["1","0"],"bottom":"0","top":"1"})";

}  // namespace

const std::vector<DispatchEntry>& dispatch_table() {
  static const std::vector<DispatchEntry> table = {
      {"word_codec", "encode_word", {"encode", "word", "--text", "p & q"}},
      {"word_codec", "make_frozen_segment", {"encode", "segment", "--body", "The sun rises.", "--index", "3"}},
      {"word_codec", "totality_membership", {"encode", "member", "--body", "x", "--index", "3", "--totality", "3"}},
      {"word_codec", "build_paradigm", {"encode", "paradigm", "--pattern", "state {i}", "--from", "1", "--to", "4"}},
      {"word_codec", "enumerate_choice_sets", {"encode", "choices", "--sample", "a,b", "--sample", "c,d"}},
      {"word_codec", "instantiate_template", {"encode", "template", "--sentence", "kinetic", "--value", "W"}},
      {"logic_engine", "is_axiom", {"deduce", "--axiom", "p & q -> q & p"}},
      {"logic_engine", "closure", {"deduce", "--gamma", "a & b & c", "--closure"}},
      {"logic_engine", "member", {"deduce", "--gamma", "a & b", "--query", "b"}},
      {"logic_engine", "make_ultraword", {"deduce", "--make-ultraword", "a,b,c"}},
      {"logic_engine", "ultimate_witness", {"deduce", "--witness", "a & b; c"}},
      {"logic_engine", "unfold", {"characterize", "--ultraword", "a & b & c", "--trace"}},
      {"logic_engine", "characterize", {"characterize", "--ultraword", "a & b & c"}},
      {"logic_engine", "verify_operator_axioms", {"check-operator", "--atoms", "a,b,c", "--fragment"}},
      {"logic_engine", "classical_compare", {"deduce", "--gamma", "a & b", "--classical", "--atoms", "a,b"}},
      {"logic_engine", "continuity_shadow", {"check-operator", "--atoms", "a,b,c", "--continuity"}},
      {"omlattice", "validate_orthomodular", {"omcheck", "--lattice", kLattice, "--schema", "1"}},
      {"omlattice", "mittelstaedt", {"omcheck", "--builtin", "mo2", "--mittelstaedt", "a,b"}},
      {"omlattice", "axiom_validity", {"omcheck", "--builtin", "mo2", "--schema", "all"}},
      {"hyperkernel", "arith", {"hyper", "eval", "--expr", "(1 + e) * (1 - e) / (2 - W)"}},
      {"hyperkernel", "compare", {"hyper", "compare", "--x", "W", "--y", "1000000"}},
      {"hyperkernel", "st", {"hyper", "st", "--expr", "3 + 5e - 2e^3"}},
      {"hyperkernel", "classify", {"hyper", "classify", "--expr", "7e^-1 + 3"}},
      {"hyperkernel", "lift", {"hyper", "lift", "--fn", "sin", "--x", "e"}},
      {"hyperkernel", "hypersum_const", {"hyper", "sum", "--count", "W", "--summand", "3e"}},
      {"hyperkernel", "hypernat_for", {"hyper", "natfor", "--r", "1/3"}},
      {"hyperkernel", "approximate_shadow", {"hyper", "approx", "--r", "1/3", "--m", "1000"}},
      {"glue", "build_glue", {"glue", "range"}},
      {"glue", "eval", {"glue", "eval", "--x", "1"}},
      {"glue", "derivative", {"glue", "deriv", "--m", "2", "--x", "1 + e"}},
      {"glue", "st_restrict", {"glue", "st", "--x", "1/2"}},
      {"glue", "range_check", {"glue", "range"}},
      {"glue", "special_partition", {"glue", "partition", "--dt", "1/8"}},
      {"glue", "avoiding_refinement", {"glue", "partition", "--dt", "1/8", "--avoid"}},
      {"glue", "telescope", {"glue", "--delta", "1/4", "telescope", "--dt", "1/8"}},
      {"glue", "resolving_process", {"glue", "resolve", "--dt", "1/8"}},
      {"subparticle", "new_ultrasubparticle", {"subp", "new", "--prime", "11", "--dims", "6"}},
      {"subparticle", "form_intermediate", {"subp", "build", "--entity", kHyperEntity}},
      {"subparticle", "combine", {"subp", "combine", "--entity", kToyEntity, "--entity", kToyEntity2}},
      {"subparticle", "add_perturbations", {"subp", "perturb", "--entity", kHyperEntity, "--coord", "3", "--zeta", "e^2"}},
      {"subparticle", "project_standard", {"subp", "project", "--entity", kHyperEntity}},
      {"subparticle", "decode", {"subp", "decode", "--id", "80080"}},
      {"subparticle", "apply_diagonal", {"subp", "diag", "--entity", R"({"name": 11})", "--lambda", "3:W"}},
      {"subparticle", "ultrafast_ke", {"subp", "ke", "--m", "e^4", "--v", "W"}},
      {"subparticle", "coin_sequence", {"coin", "--x", "1/3", "--count", "4"}},
      {"cli", "dispatch", {"suite", "--criterion", "11"}},
  };
  return table;
}

}  // namespace ulab::cli
