#include "commands.hpp"
#include "io.hpp"

#include "ulab/error.hpp"
#include "ulab/logic/engine.hpp"
#include "ulab/logic/operators.hpp"
#include "ulab/om/ortho_lattice.hpp"

#include "CLI11.hpp"

#include <bit>
#include <filesystem>
#include <fstream>

namespace ulab::cli {
namespace {

using logic::Formula;
using logic::FormulaSet;
using nlohmann::json;

/// A file with one formula per line, or formulas separated by ';'.
FormulaSet read_gamma(const std::string& arg) {
  FormulaSet gamma;
  std::vector<std::string> lines;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  } else {
    lines = split_list(arg, ';');
  }
  for (const auto& line : lines) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gamma.insert(logic::parse_formula(line));
  }
  return gamma;
}

std::vector<Formula> atoms_from(const std::vector<std::string>& names) {
  std::vector<Formula> atoms;
  for (const auto& n : names) atoms.push_back(Formula::atom(n));
  return atoms;
}

json set_json(const FormulaSet& set) {
  json out = json::array();
  for (const auto& f : set) out.push_back(f.str());
  return out;
}

std::string justification(const logic::Justification& why) {
  switch (why.kind) {
    case logic::Justification::Kind::hypothesis: return "hypothesis";
    case logic::Justification::Kind::axiom: return "axiom " + std::to_string(why.schema);
    case logic::Justification::Kind::modus_ponens:
      return "MP " + std::to_string(why.premise + 1) + "," + std::to_string(why.rule + 1);
  }
  return {};
}

void register_deduce(CLI::App& app, Registry& registry) {
  struct Options {
    std::string gamma;
    std::string query;
    bool closure = false;
    std::string axiom;
    bool classical = false;
    std::string atoms;
    std::string make_ultraword;
    std::string witness;
  };
  auto o = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("deduce", "Deduction in the finitary system: membership, closure, axioms");
  cmd->add_option("--gamma", o->gamma, "Hypotheses: a file with one formula per line, or 'f1; f2'");
  cmd->add_option("--query", o->query, "Formula to test for membership in the closure");
  cmd->add_flag("--closure", o->closure, "Print the derived set");
  cmd->add_option("--axiom", o->axiom, "Report the axiom schema a formula instantiates");
  cmd->add_flag("--classical", o->classical, "Compare the closure with truth-table consequence");
  cmd->add_option("--atoms", o->atoms, "Comma-separated atom universe for --classical");
  cmd->add_option("--make-ultraword", o->make_ultraword, "Comma-separated atoms to join into an ultraword");
  cmd->add_option("--witness", o->witness, "Formulas 'f1; f2; ...' joined into an ultimate witness");
  registry.push_back({cmd, [o](Context& ctx) {
    bool acted = false;
    if (!o->axiom.empty()) {
      acted = true;
      const auto schema = logic::is_axiom(logic::parse_formula(o->axiom));
      if (ctx.json) ctx.out << json{{"formula", o->axiom}, {"schema", schema ? json(*schema) : json(nullptr)}}.dump() << "\n";
      else ctx.out << (schema ? "axiom " + std::to_string(*schema) : std::string("not an axiom")) << "\n";
    }
    if (!o->make_ultraword.empty()) {
      acted = true;
      const auto w = logic::make_ultraword(atoms_from(split_list(o->make_ultraword, ',')));
      ctx.out << (ctx.json ? json{{"ultraword", w.str()}}.dump() : w.str()) << "\n";
    }
    if (!o->witness.empty()) {
      acted = true;
      std::vector<Formula> parts;
      for (const auto& s : split_list(o->witness, ';')) parts.push_back(logic::parse_formula(s));
      const auto w = logic::ultimate_witness(parts);
      ctx.out << (ctx.json ? json{{"witness", w.str()}}.dump() : w.str()) << "\n";
    }
    if (o->query.empty() && !o->closure && !o->classical) {
      if (!acted) fail(Errc::InvalidArgument, "nothing to do: give --query, --closure, --classical, --axiom, --make-ultraword or --witness");
      return;
    }
    if (o->gamma.empty()) fail(Errc::InvalidArgument, "--gamma is required");
    const FormulaSet gamma = read_gamma(o->gamma);
    if (!o->query.empty()) {
      const bool in = logic::member(logic::parse_formula(o->query), gamma);
      if (ctx.json) ctx.out << json{{"query", o->query}, {"member", in}}.dump() << "\n";
      else ctx.out << (in ? "derivable" : "not derivable") << "\n";
    }
    if (o->closure) {
      const auto derived = logic::closure(gamma);
      if (ctx.json) ctx.out << json{{"closure", set_json(derived)}}.dump() << "\n";
      else
        for (const auto& f : derived) ctx.out << f.str() << "\n";
    }
    if (o->classical) {
      std::vector<std::string> atoms = split_list(o->atoms, ',');
      if (atoms.empty())
        for (const auto& f : gamma)
          for (const auto& a : f.atoms())
            if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
      const auto report = logic::classical_compare(gamma, atoms);
      const auto opt = [](const std::optional<Formula>& f) { return f ? json(f->str()) : json(nullptr); };
      if (ctx.json) {
        ctx.out << json{{"derived_checked", report.derived_checked}, {"axioms_checked", report.axioms_checked},
                        {"sound", report.sound()}, {"unsound", opt(report.unsound)},
                        {"non_tautology", opt(report.non_tautology)}, {"strict", report.strict()},
                        {"strict_witness", opt(report.strict_witness)}}
                       .dump()
                << "\n";
      } else {
        ctx.out << "derived checked " << report.derived_checked << "\naxiom instances checked " << report.axioms_checked
                << "\nsound " << (report.sound() ? "yes" : "no") << "\n";
        if (report.unsound) ctx.out << "unsound " << report.unsound->str() << "\n";
        if (report.non_tautology) ctx.out << "non-tautology " << report.non_tautology->str() << "\n";
        if (report.strict_witness) ctx.out << "classical only " << report.strict_witness->str() << "\n";
      }
    }
  }});
}

void register_characterize(CLI::App& app, Registry& registry) {
  struct Options {
    std::string ultraword;
    bool trace = false;
  };
  auto o = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("characterize", "Characterize the closure of an ultraword");
  cmd->add_option("--ultraword", o->ultraword, "Left-ordered conjunction of distinct atoms")->required();
  cmd->add_flag("--trace", o->trace, "Print the unfolding proof instead");
  registry.push_back({cmd, [o](Context& ctx) {
    const Formula w = logic::parse_formula(o->ultraword);
    if (o->trace) {
      const auto trace = logic::unfold(w);
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        if (ctx.json)
          ctx.out << json{{"step", i + 1}, {"formula", step.formula.str()}, {"by", justification(step.why)}}.dump() << "\n";
        else
          ctx.out << i + 1 << ". " << step.formula.str() << "  [" << justification(step.why) << "]\n";
      }
      return;
    }
    const auto c = logic::characterize(w);
    if (ctx.json) {
      ctx.out << json{{"ultraword", c.ultraword.str()}, {"q", set_json(c.q_set)}, {"d_prime", set_json(c.d_prime)},
                      {"disjoint", c.disjoint}, {"contains_ultraword", c.contains_ultraword},
                      {"atoms_covered", c.atoms_covered}, {"consistent", c.consistent()}}
                     .dump()
              << "\n";
      return;
    }
    ctx.out << "ultraword " << c.ultraword.str() << "\nQ " << logic::to_string(c.q_set) << "\nd' "
            << logic::to_string(c.d_prime) << "\ndisjoint " << (c.disjoint ? "yes" : "no") << "\nconsistent "
            << (c.consistent() ? "yes" : "no") << "\n";
  }});
}

void register_check_operator(CLI::App& app, Registry& registry) {
  struct Options {
    std::string atoms = "a,b,c";
    std::string op = "closure";
    bool fragment = false;
    bool continuity = false;
    std::size_t bound = 1;
  };
  auto o = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("check-operator", "Check consequence-operator axioms on a finite universe");
  cmd->add_option("--atoms", o->atoms, "Comma-separated atoms");
  cmd->add_option("--operator", o->op, "closure, identity, or broken (forgets sets of two or more)")
      ->check(CLI::IsMember({"closure", "identity", "broken"}));
  cmd->add_flag("--fragment", o->fragment, "Use the left-ordered conjunction fragment as universe");
  cmd->add_flag("--continuity", o->continuity, "Run the monotone-image check instead");
  cmd->add_option("--bound", o->bound, "Support bound for the finitary check");
  registry.push_back({cmd, [o](Context& ctx) {
    const auto names = split_list(o->atoms, ',');
    std::vector<Formula> universe = o->fragment ? logic::conjunction_fragment(names) : atoms_from(names);
    const logic::OperatorTable op =
        o->op == "closure"    ? logic::OperatorTable::from_closure(universe)
        : o->op == "identity" ? logic::OperatorTable::identity(universe)
                              : logic::OperatorTable::from_function(universe, [](logic::Mask m) {
                                  return std::popcount(m) <= 1 ? m : logic::Mask{0};
                                });
    if (o->continuity) {
      const auto result = logic::continuity_shadow(op);
      json j{{"holds", result.holds}};
      if (result.witness)
        j["witness"] = {{"B", logic::to_string(op.set_of(result.witness->first))},
                        {"A", logic::to_string(op.set_of(result.witness->second))}};
      if (ctx.json) {
        ctx.out << j.dump() << "\n";
        return;
      }
      ctx.out << "continuity " << (result.holds ? "holds" : "fails") << "\n";
      if (result.witness)
        ctx.out << "witness B=" << j["witness"]["B"].get<std::string>() << " A=" << j["witness"]["A"].get<std::string>()
                << "\n";
      return;
    }
    const auto report = logic::verify_operator_axioms(op, o->bound);
    if (ctx.json) {
      for (const auto& c : report.checks)
        ctx.out << json{{"axiom", c.name}, {"pass", c.pass},
                        {"witness", c.witness ? json(logic::to_string(op.set_of(*c.witness))) : json(nullptr)},
                        {"detail", c.detail}}
                       .dump()
                << "\n";
      return;
    }
    ctx.out << report.str(op);
  }});
}

om::OrthoLattice builtin_lattice(const std::string& name) {
  if (name == "mo2") return om::OrthoLattice::mo2();
  if (name.rfind("boolean", 0) == 0 && name.size() == 8 && name[7] >= '1' && name[7] <= '3')
    return om::OrthoLattice::boolean(static_cast<unsigned>(name[7] - '0'));
  fail(Errc::InvalidArgument, "unknown built-in lattice " + name + " (mo2, boolean1, boolean2, boolean3)");
}

om::Element element(const om::OrthoLattice& l, const std::string& name) {
  const auto e = l.find(name);
  if (!e) fail(Errc::InvalidArgument, "no element named " + name);
  return *e;
}

void register_omcheck(CLI::App& app, Registry& registry) {
  struct Options {
    std::string lattice;
    std::string builtin = "mo2";
    std::string schema = "all";
    std::string conditional;
  };
  auto o = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("omcheck", "Orthomodular checks and axiom validity under the Mittelstaedt conditional");
  cmd->add_option("--lattice", o->lattice, "Lattice JSON (file or inline)");
  cmd->add_option("--builtin", o->builtin, "mo2, boolean1, boolean2 or boolean3");
  cmd->add_option("--schema", o->schema, "all or a schema number 1..4")->check(CLI::IsMember({"all", "1", "2", "3", "4"}));
  cmd->add_option("--mittelstaedt", o->conditional, "Evaluate the conditional on 'a,b'");
  registry.push_back({cmd, [o](Context& ctx) {
    const om::OrthoLattice l =
        o->lattice.empty() ? builtin_lattice(o->builtin) : om::OrthoLattice::from_json(load_json_arg(o->lattice));
    const auto violation = om::validate_orthomodular(l);
    if (ctx.json) {
      ctx.out << json{{"elements", l.size()}, {"orthomodular", !violation},
                      {"violation", violation ? json(violation->str(l)) : json(nullptr)}}
                     .dump()
              << "\n";
    } else {
      ctx.out << "elements " << l.size() << "\northomodular "
              << (violation ? "no: " + violation->str(l) : std::string("yes")) << "\n";
    }
    if (violation) fail(Errc::MalformedTable, "not an orthomodular lattice: " + violation->str(l));
    if (!o->conditional.empty()) {
      const auto args = split_list(o->conditional, ',');
      if (args.size() != 2) fail(Errc::InvalidArgument, "--mittelstaedt takes two element names");
      const auto v = om::mittelstaedt(l, element(l, args[0]), element(l, args[1]));
      if (ctx.json) ctx.out << json{{"a", args[0]}, {"b", args[1]}, {"value", l.name(v)}}.dump() << "\n";
      else ctx.out << args[0] << " -> " << args[1] << " = " << l.name(v) << "\n";
      return;
    }
    std::vector<int> schemas{1, 2, 3, 4};
    if (o->schema != "all") schemas = {std::stoi(o->schema)};
    for (int s : schemas) {
      const auto r = om::axiom_validity(l, s);
      std::vector<std::string> counter;
      for (auto e : r.counterexample) counter.push_back(l.name(e));
      if (ctx.json) {
        ctx.out << json{{"schema", s}, {"valid", r.valid}, {"assignments", r.assignments},
                        {"counterexample", r.valid ? json(nullptr) : json(counter)}}
                       .dump()
                << "\n";
        continue;
      }
      ctx.out << "schema " << s << " " << (r.valid ? "valid" : "INVALID") << " (" << r.assignments << " assignments)";
      if (!r.valid) {
        ctx.out << " counterexample A,B,C =";
        for (const auto& c : counter) ctx.out << " " << c;
      }
      ctx.out << "\n";
    }
  }});
}

}  // namespace

void register_logic_commands(CLI::App& app, Registry& registry) {
  register_deduce(app, registry);
  register_characterize(app, registry);
  register_check_operator(app, registry);
  register_omcheck(app, registry);
}

}  // namespace ulab::cli
