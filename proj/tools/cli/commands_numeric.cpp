#include "commands.hpp"
#include "io.hpp"

#include "ulab/error.hpp"
#include "ulab/glue/glue.hpp"
#include "ulab/glue/partition.hpp"
#include "ulab/hyper/expr.hpp"
#include "ulab/hyper/kernel.hpp"
#include "ulab/subp/coin.hpp"
#include "ulab/subp/subparticle.hpp"

#include "CLI11.hpp"

#include <iomanip>

namespace ulab::cli {
namespace {

using hyper::BigInt;
using hyper::HyperReal;
using hyper::Rational;
using hyper::Scalar;
using nlohmann::json;

HyperReal series(const std::string& text) { return hyper::parse_hyperreal(text); }

void print_value(Context& ctx, const std::string& key, const std::string& value) {
  if (ctx.json) ctx.out << json{{key, value}}.dump() << "\n";
  else ctx.out << value << "\n";
}

hyper::Transcendental transcendental(const std::string& name) {
  if (name == "sin") return hyper::Transcendental::sin;
  if (name == "cos") return hyper::Transcendental::cos;
  return hyper::Transcendental::exp;
}

// Shared by `hyper approx` and the top-level `approx`.
void add_approx(CLI::App* parent, Registry& registry) {
  auto r = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>("1000");
  auto* cmd = parent->add_subcommand("approx", "Lower grid approximation f/m of a rational r");
  cmd->add_option("--r", *r, "Rational, e.g. 1/3 or 0.25")->required();
  cmd->add_option("--m", *m, "Positive grid size");
  registry.push_back({cmd, [r, m](Context& ctx) {
    const auto a = hyper::approximate_shadow(hyper::parse_rational(*r), BigInt(*m));
    if (ctx.json) {
      ctx.out << json{{"r", hyper::rational_str(a.r)}, {"m", a.m.str()}, {"n", a.n.str()}, {"c", a.c.str()},
                      {"f", a.f.str()}, {"gap", hyper::rational_str(a.gap)}, {"certified", a.certified}}
                     .dump()
              << "\n";
      return;
    }
    ctx.out << a.f.str() << "/" << a.m.str() << ", gap " << hyper::rational_str(a.gap) << "\n";
  }});
}

void register_hyper(CLI::App& app, Registry& registry) {
  auto* hyper_cmd = app.add_subcommand("hyper", "Truncated infinitesimal arithmetic (e = epsilon, W = omega)");
  hyper_cmd->require_subcommand(1);

  auto expr = std::make_shared<std::string>();
  auto* eval = hyper_cmd->add_subcommand("eval", "Evaluate a series expression");
  eval->add_option("--expr", *expr, "Expression such as '3 + 5e - 2e^3 + 7e^-1' or '(1+e)/(1-e)'")->required();
  registry.push_back({eval, [expr](Context& ctx) { print_value(ctx, "value", series(*expr).str()); }});

  auto* st = hyper_cmd->add_subcommand("st", "Standard part of a limited value");
  st->add_option("--expr", *expr, "Expression")->required();
  registry.push_back({st, [expr](Context& ctx) { print_value(ctx, "st", hyper::st(series(*expr)).str()); }});

  auto* classify = hyper_cmd->add_subcommand("classify", "infinitesimal, limited or unlimited");
  classify->add_option("--expr", *expr, "Expression")->required();
  registry.push_back({classify, [expr](Context& ctx) {
    print_value(ctx, "magnitude", std::string(hyper::magnitude_name(hyper::classify(series(*expr)))));
  }});

  auto lhs = std::make_shared<std::string>();
  auto rhs = std::make_shared<std::string>();
  auto* compare = hyper_cmd->add_subcommand("compare", "Order two values");
  compare->add_option("--x", *lhs, "Left expression")->required();
  compare->add_option("--y", *rhs, "Right expression")->required();
  registry.push_back({compare, [lhs, rhs](Context& ctx) {
    print_value(ctx, "ordering", std::string(hyper::ordering_name(hyper::compare(series(*lhs), series(*rhs)))));
  }});

  auto fn = std::make_shared<std::string>("sin");
  auto half_pi = std::make_shared<bool>(false);
  auto* lift = hyper_cmd->add_subcommand("lift", "sin, cos or exp of a limited value");
  lift->add_option("--fn", *fn, "sin, cos or exp")->check(CLI::IsMember({"sin", "cos", "exp"}));
  lift->add_option("--x", *expr, "Argument")->required();
  lift->add_flag("--half-pi", *half_pi, "Evaluate fn(x pi/2) instead (sin and cos)");
  registry.push_back({lift, [fn, expr, half_pi](Context& ctx) {
    const HyperReal x = series(*expr);
    const auto f = transcendental(*fn);
    print_value(ctx, "value", (*half_pi ? hyper::lift_half_pi(f, x) : hyper::lift(f, x)).str());
  }});

  auto r = std::make_shared<std::string>();
  auto* natfor = hyper_cmd->add_subcommand("natfor", "Hypernatural lambda with st(lambda e) = r");
  natfor->add_option("--r", *r, "Nonnegative rational")->required();
  registry.push_back({natfor, [r](Context& ctx) {
    const auto lambda = hyper::hypernat_for(hyper::parse_rational(*r));
    const auto back = hyper::st(lambda.value() * HyperReal::epsilon());
    if (ctx.json) ctx.out << json{{"lambda", lambda.str()}, {"st_lambda_e", back.str()}}.dump() << "\n";
    else ctx.out << "lambda " << lambda.str() << "\nst(lambda e) " << back.str() << "\n";
  }});

  auto count = std::make_shared<std::string>();
  auto summand = std::make_shared<std::string>();
  auto* sum = hyper_cmd->add_subcommand("sum", "Sum of count copies of one summand");
  sum->add_option("--count", *count, "Natural or hypernatural, e.g. 12 or 3W")->required();
  sum->add_option("--summand", *summand, "Summand expression")->required();
  registry.push_back({sum, [count, summand](Context& ctx) {
    const auto total = hyper::hypersum_const(hyper::NatLike(series(*count)), series(*summand));
    const std::string magnitude(hyper::magnitude_name(hyper::classify(total)));
    if (ctx.json) {
      ctx.out << json{{"sum", total.str()}, {"magnitude", magnitude}}.dump() << "\n";
      return;
    }
    ctx.out << total.str() << "\n" << magnitude << "\n";
  }});

  add_approx(hyper_cmd, registry);
}

struct GlueOptions {
  std::string spec;
  std::string delta;
  std::string x;
  int m = 1;
  bool emit_csv = false;
  std::size_t samples = 201;
  std::string dt;
  bool avoid = false;
};

glue::GlueFunction build_glue(const GlueOptions& o) {
  if (o.spec.empty())
    return glue::GlueFunction(glue::StepSpec::neutron(), series(o.delta.empty() ? "e" : o.delta));
  json j = load_json_arg(o.spec);
  if (!o.delta.empty()) j["delta"] = o.delta;
  return glue::GlueFunction::from_json(j);
}

Rational default_dt(const glue::StepSpec& spec) {
  return (spec.partition.back() - spec.partition.front()) / 16;
}

std::set<Rational> interior_points(const glue::StepSpec& spec) {
  return {spec.partition.begin() + 1, spec.partition.end() - 1};
}

void register_glue(CLI::App& app, Registry& registry) {
  auto o = std::make_shared<GlueOptions>();
  auto* glue_cmd = app.add_subcommand("glue", "Smoothed step functions (default spec: neutron demo, delta = e)");
  glue_cmd->require_subcommand(1);
  glue_cmd->add_option("--spec", o->spec, "Spec JSON {partition, values, delta} (file or inline)");
  glue_cmd->add_option("--delta", o->delta, "Transition half-width: a positive rational or infinitesimal");

  auto* eval = glue_cmd->add_subcommand("eval", "Evaluate G");
  eval->add_option("--x", o->x, "Point in the domain (series expression)");
  eval->add_flag("--emit-csv", o->emit_csv, "Dump x,st(G(x)) samples over the domain");
  eval->add_option("--samples", o->samples, "Sample count for --emit-csv")->check(CLI::Range(2, 1000000));
  registry.push_back({eval, [o](Context& ctx) {
    const auto g = build_glue(*o);
    if (o->emit_csv) {
      const auto& p = g.spec().partition;
      const Rational width = p.back() - p.front();
      ctx.out << "x,G\n" << std::setprecision(12);
      for (std::size_t k = 0; k < o->samples; ++k) {
        const Rational x = p.front() + width * Rational(static_cast<long>(k), static_cast<long>(o->samples - 1));
        const Scalar y = hyper::st(g.eval(HyperReal(Scalar(x))));
        ctx.out << x.convert_to<double>() << "," << y.to_decimal().convert_to<double>() << "\n";
      }
      return;
    }
    if (o->x.empty()) fail(Errc::InvalidArgument, "--x is required unless --emit-csv is given");
    print_value(ctx, "value", g.eval(series(o->x)).str());
  }});

  auto* deriv = glue_cmd->add_subcommand("deriv", "m-th derivative of G");
  deriv->add_option("--x", o->x, "Point (series expression)")->required();
  deriv->add_option("--m", o->m, "Derivative order")->check(CLI::PositiveNumber);
  registry.push_back({deriv, [o](Context& ctx) {
    print_value(ctx, "value", build_glue(*o).derivative(o->m, series(o->x)).str());
  }});

  auto* st = glue_cmd->add_subcommand("st", "Standard part of G at a rational off the partition points");
  st->add_option("--x", o->x, "Rational point")->required();
  registry.push_back({st, [o](Context& ctx) {
    print_value(ctx, "st", build_glue(*o).st_restrict(hyper::parse_rational(o->x)).str());
  }});

  auto* range = glue_cmd->add_subcommand("range", "Range of G with certificate samples");
  registry.push_back({range, [o](Context& ctx) {
    const auto report = glue::range_check(build_glue(*o));
    if (ctx.json) {
      ctx.out << json{{"low", hyper::rational_str(report.low)}, {"high", hyper::rational_str(report.high)},
                      {"certified", report.certified}, {"samples", report.samples}}
                     .dump()
              << "\n";
      return;
    }
    ctx.out << "range [" << hyper::rational_str(report.low) << ", " << hyper::rational_str(report.high) << "] "
            << (report.certified ? "certified" : "NOT certified") << "\n";
    for (const auto& s : report.samples) ctx.out << "  " << s << "\n";
  }});

  auto* partition = glue_cmd->add_subcommand("partition", "Special partition of the domain and its avoiding selection");
  partition->add_option("--dt", o->dt, "Cell width (default: domain width / 16)");
  partition->add_flag("--avoid", o->avoid, "Select points avoiding the interior partition points");
  registry.push_back({partition, [o](Context& ctx) {
    const auto g = build_glue(*o);
    const auto& p = g.spec().partition;
    const auto part = glue::special_partition(p.front(), p.back(),
                                              o->dt.empty() ? default_dt(g.spec()) : hyper::parse_rational(o->dt));
    const auto points = o->avoid ? glue::avoiding_refinement(part, interior_points(g.spec())) : part.points;
    std::vector<std::string> text;
    for (const auto& t : points) text.push_back(hyper::rational_str(t));
    if (ctx.json) {
      ctx.out << json{{"mesh", hyper::rational_str(part.mesh)}, {"points", text}}.dump() << "\n";
      return;
    }
    ctx.out << "mesh " << hyper::rational_str(part.mesh) << "\n";
    for (const auto& t : text) ctx.out << t << "\n";
  }});

  auto* telescope = glue_cmd->add_subcommand("telescope", "Telescoping sum of G over a partition of the domain");
  telescope->add_option("--dt", o->dt, "Cell width (default: domain width / 16)");
  telescope->add_flag("--avoid", o->avoid, "Use the selection avoiding interior partition points");
  registry.push_back({telescope, [o](Context& ctx) {
    const auto g = build_glue(*o);
    const auto& p = g.spec().partition;
    const auto part = glue::special_partition(p.front(), p.back(),
                                              o->dt.empty() ? default_dt(g.spec()) : hyper::parse_rational(o->dt));
    const auto points = o->avoid ? glue::avoiding_refinement(part, interior_points(g.spec())) : part.points;
    const auto report = glue::telescope([&g](const HyperReal& x) { return g.eval(x); }, points);
    const HyperReal bound = g.derivative_bound() * HyperReal(Scalar(report.max_gap));
    if (ctx.json) {
      for (std::size_t i = 0; i < report.increments.size(); ++i)
        ctx.out << json{{"low", hyper::rational_str(points[i])}, {"high", hyper::rational_str(points[i + 1])},
                        {"increment", report.increments[i].str()}}
                       .dump()
                << "\n";
      ctx.out << json{{"total", report.total.str()}, {"endpoint_difference", report.endpoint_difference.str()},
                      {"identity_holds", report.identity_holds}, {"max_increment", report.max_increment.str()},
                      {"increment_bound", bound.str()}}
                     .dump()
              << "\n";
      return;
    }
    for (std::size_t i = 0; i < report.increments.size(); ++i)
      ctx.out << hyper::rational_str(points[i]) << " .. " << hyper::rational_str(points[i + 1]) << "  "
              << report.increments[i].str() << "\n";
    ctx.out << "total " << report.total.str() << "\nG(T) - G(a) " << report.endpoint_difference.str()
            << "\nidentity " << (report.identity_holds ? "holds" : "FAILS") << "\nmax increment "
            << report.max_increment.str() << "\nbound " << bound.str() << "\n";
  }});

  auto* resolve = glue_cmd->add_subcommand("resolve", "Resolve the step function over a selection avoiding its jumps");
  resolve->add_option("--dt", o->dt, "Cell width (default: domain width / 16)");
  registry.push_back({resolve, [o](Context& ctx) {
    const auto g = build_glue(*o);
    const auto& p = g.spec().partition;
    const auto part = glue::special_partition(p.front(), p.back(),
                                              o->dt.empty() ? default_dt(g.spec()) : hyper::parse_rational(o->dt));
    for (const auto& iv : glue::resolving_process(g.spec(), glue::avoiding_refinement(part, interior_points(g.spec())))) {
      if (ctx.json)
        ctx.out << json{{"low", hyper::rational_str(iv.low)}, {"high", hyper::rational_str(iv.high)},
                        {"increment", hyper::rational_str(iv.increment)}}
                       .dump()
                << "\n";
      else
        ctx.out << "[" << hyper::rational_str(iv.low) << ", " << hyper::rational_str(iv.high) << "]  "
                << hyper::rational_str(iv.increment) << "\n";
    }
  }});
}

void print_entity(Context& ctx, const subp::SubparticleRep& p, const subp::Scheme& scheme) {
  const json j = subp::to_json(p, scheme, ctx.config);
  if (ctx.json) {
    ctx.out << j.dump() << "\n";
    return;
  }
  ctx.out << "a1 " << j["a1"].get<std::string>();
  if (j.contains("a1_value")) ctx.out << " = " << j["a1_value"].get<std::string>();
  ctx.out << "\na2 " << j["a2"].get<std::string>() << "\n";
  for (const auto& [index, value] : p.coords)
    ctx.out << "a" << index << " (" << ctx.config.quality_name(index) << ") " << value.str() << "\n";
}

subp::SubparticleRep entity(const std::string& arg, const subp::Scheme& scheme) {
  return subp::entity_from_json(load_json_arg(arg), scheme);
}

void add_coin(CLI::App* parent, Registry& registry) {
  auto x = std::make_shared<std::string>();
  auto count = std::make_shared<std::size_t>(20);
  auto stats = std::make_shared<bool>(false);
  auto* cmd = parent->add_subcommand("coin", "Binary-expansion coin flips of a rational in (0,1)");
  cmd->add_option("--x", *x, "Rational in (0,1)")->required();
  cmd->add_option("--count", *count, "Number of flips");
  cmd->add_flag("--stats", *stats, "Report frequency and runs statistics");
  registry.push_back({cmd, [x, count, stats](Context& ctx) {
    const std::string flips = subp::coin_sequence(hyper::parse_rational(*x), *count);
    if (!*stats) {
      print_value(ctx, "flips", flips);
      return;
    }
    const auto s = subp::coin_statistics(flips);
    std::ostringstream fraction, z;
    fraction << std::fixed << std::setprecision(4) << s.head_fraction;
    z << std::fixed << std::setprecision(4) << s.runs_z;
    if (ctx.json) {
      ctx.out << json{{"flips", s.flips}, {"heads", s.heads}, {"runs", s.runs}, {"head_fraction", fraction.str()},
                      {"runs_z", z.str()}, {"frequency_ok", s.frequency_ok}, {"runs_ok", s.runs_ok}}
                     .dump()
              << "\n";
      return;
    }
    ctx.out << "flips " << s.flips << "\nheads " << s.heads << " (" << fraction.str() << ")\nruns " << s.runs
            << " (z " << z.str() << ")\nfrequency " << (s.frequency_ok ? "ok" : "off") << "\nruns test "
            << (s.runs_ok ? "ok" : "off") << "\n";
  }});
}

void register_subp(CLI::App& app, Registry& registry) {
  auto* subp_cmd = app.add_subcommand("subp", "Prime-encoded subparticle algebra");
  subp_cmd->require_subcommand(1);
  auto file = std::make_shared<std::string>();

  auto* build = subp_cmd->add_subcommand("build", "Build an entity from JSON");
  build->add_option("--entity", *file, "Entity JSON (file or inline)")->required();
  registry.push_back({build, [file](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    print_entity(ctx, entity(*file, scheme), scheme);
  }});

  auto prime = std::make_shared<std::string>();
  auto k_index = std::make_shared<std::string>();
  auto dims = std::make_shared<int>(6);
  auto* make = subp_cmd->add_subcommand("new", "A single ultrasubparticle named by a prime of K");
  auto* prime_opt = make->add_option("--prime", *prime, "Naming prime");
  make->add_option("--k", *k_index, "Index into K instead of a prime")->excludes(prime_opt);
  make->add_option("--dims", *dims, "Coordinate count")->check(CLI::PositiveNumber);
  registry.push_back({make, [prime, k_index, dims](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    if (prime->empty() == k_index->empty()) fail(Errc::InvalidArgument, "give exactly one of --prime and --k");
    const subp::Name name = prime->empty() ? subp::Name{subp::Name::Kind::k_index, BigInt(*k_index)}
                                           : subp::Name{subp::Name::Kind::prime, BigInt(*prime)};
    print_entity(ctx, subp::new_ultrasubparticle(scheme, name, *dims), scheme);
  }});

  auto files = std::make_shared<std::vector<std::string>>();
  auto* comb = subp_cmd->add_subcommand("combine", "Combine several entities");
  comb->add_option("--entity", *files, "Entity JSON; repeat")->required();
  registry.push_back({comb, [files](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    std::vector<subp::SubparticleRep> parts;
    for (const auto& f : *files) parts.push_back(entity(f, scheme));
    print_entity(ctx, subp::combine(parts), scheme);
  }});

  auto* project = subp_cmd->add_subcommand("project", "Standard projection of an entity");
  project->add_option("--entity", *file, "Entity JSON")->required();
  registry.push_back({project, [file](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    const auto proj = subp::project_standard(entity(*file, scheme));
    if (ctx.json) {
      json coords = json::object();
      for (const auto& [i, v] : proj.coords) coords[std::to_string(i)] = v.str();
      ctx.out << json{{"coords", coords}, {"zeroed", proj.zeroed}}.dump() << "\n";
      return;
    }
    for (const auto& [i, v] : proj.coords) ctx.out << "a" << i << " (" << ctx.config.quality_name(i) << ") " << v.str() << "\n";
    ctx.out << "zeroed";
    for (int i : proj.zeroed) ctx.out << " a" << i;
    ctx.out << "\n";
  }});

  auto zetas = std::make_shared<std::vector<std::string>>();
  auto coord = std::make_shared<int>(3);
  auto* perturb = subp_cmd->add_subcommand("perturb", "Add infinitesimal perturbations to one coordinate");
  perturb->add_option("--entity", *file, "Entity JSON")->required();
  perturb->add_option("--zeta", *zetas, "Infinitesimal; repeat")->required();
  perturb->add_option("--coord", *coord, "Coordinate index");
  registry.push_back({perturb, [file, zetas, coord](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    std::vector<HyperReal> values;
    for (const auto& z : *zetas) values.push_back(series(z));
    print_entity(ctx, subp::add_perturbations(entity(*file, scheme), values, *coord), scheme);
  }});

  auto id = std::make_shared<std::string>();
  auto* dec = subp_cmd->add_subcommand("decode", "Decode an identifier into characteristics and constituents");
  auto* id_opt = dec->add_option("--id", *id, "Toy identifier (integer)");
  dec->add_option("--entity", *file, "Decode the identifier of this entity")->excludes(id_opt);
  registry.push_back({dec, [id, file](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    if (id->empty() == file->empty()) fail(Errc::InvalidArgument, "give exactly one of --id and --entity");
    const auto d = id->empty() ? subp::decode(entity(*file, scheme).a1) : subp::decode(scheme, BigInt(*id));
    if (!ctx.json) {
      ctx.out << d.str();
      return;
    }
    json chars = json::array();
    for (const auto& c : d.characteristics)
      chars.push_back(json{{"i", c.i}, {"exponent", c.exponent.str()}, {"r", c.r ? json(c.r->str()) : json(nullptr)}});
    json naming = json::object();
    for (const auto& [p, mult] : d.naming_primes) naming[p.str()] = mult.str();
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(json::array({b.start, b.count.str()}));
    ctx.out << json{{"characteristics", chars}, {"naming", naming}, {"blocks", blocks}}.dump() << "\n";
  }});

  auto lambdas = std::make_shared<std::vector<std::string>>();
  auto* diag = subp_cmd->add_subcommand("diag", "Scale coordinates by (hyper)naturals");
  diag->add_option("--entity", *file, "Entity JSON")->required();
  diag->add_option("--lambda", *lambdas, "coord:value, e.g. 3:W; repeat")->required();
  registry.push_back({diag, [file, lambdas](Context& ctx) {
    const auto scheme = subp::Scheme::from_config(ctx.config);
    std::map<int, hyper::NatLike> scale;
    for (const auto& item : *lambdas) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) fail(Errc::InvalidArgument, "--lambda expects coord:value, got " + item);
      scale.insert_or_assign(std::stoi(item.substr(0, colon)), hyper::NatLike(series(item.substr(colon + 1))));
    }
    print_entity(ctx, subp::apply_diagonal(scale, entity(*file, scheme)), scheme);
  }});

  auto mass = std::make_shared<std::string>();
  auto velocity = std::make_shared<std::string>();
  auto* ke = subp_cmd->add_subcommand("ke", "Kinetic energy m v^2 / 2 with its magnitude");
  ke->add_option("--m", *mass, "Mass expression")->required();
  ke->add_option("--v", *velocity, "Velocity expression")->required();
  registry.push_back({ke, [mass, velocity](Context& ctx) {
    const auto energy = subp::ultrafast_ke(series(*mass), series(*velocity));
    const std::string magnitude(hyper::magnitude_name(hyper::classify(energy)));
    if (ctx.json) {
      ctx.out << json{{"energy", energy.str()}, {"magnitude", magnitude}}.dump() << "\n";
      return;
    }
    ctx.out << energy.str() << "\n" << magnitude << "\n";
  }});

  add_coin(subp_cmd, registry);
}

}  // namespace

void register_numeric_commands(CLI::App& app, Registry& registry) {
  register_hyper(app, registry);
  add_approx(&app, registry);
  register_glue(app, registry);
  register_subp(app, registry);
  add_coin(&app, registry);
}

}  // namespace ulab::cli
