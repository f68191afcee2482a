#include "commands.hpp"

#include "acceptance.hpp"
#include "io.hpp"

#include "ulab/error.hpp"
#include "ulab/hyper/expr.hpp"
#include "ulab/words/word_codec.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

namespace ulab::cli {

nlohmann::json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) fail(Errc::Io, "cannot open " + arg);
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, arg + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(delimiter, start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto lo = item.find_first_not_of(' ');
    const auto hi = item.find_last_not_of(' ');
    if (lo != std::string::npos) out.push_back(item.substr(lo, hi - lo + 1));
    if (end == std::string::npos) return out;
    start = end + 1;
  }
}

namespace {

words::Alphabet alphabet_for(const RunConfig& config) {
  return config.alphabet_path ? words::Alphabet::load(*config.alphabet_path) : words::Alphabet::standard();
}

words::SegmentCodec codec_for(const RunConfig& config) {
  return words::SegmentCodec(alphabet_for(config), config.frozen_tail_template);
}

std::string sentence_for(const std::string& name) {
  if (name == "kinetic") return std::string(words::kParticleKineticTemplate);
  if (name == "total") return std::string(words::kParticleTotalTemplate);
  return name;
}

}  // namespace

void register_word_commands(CLI::App& app, Registry& registry) {
  auto* encode = app.add_subcommand("encode", "Word encoding, frozen segments, paradigms, templates, choice sets");
  encode->require_subcommand(1);

  auto* word = encode->add_subcommand("word", "Encode a word as alphabet codes and decode it back");
  auto text = std::make_shared<std::string>();
  word->add_option("--text", *text, "Word to encode")->required();
  registry.push_back({word, [text](Context& ctx) {
                        const auto alphabet = alphabet_for(ctx.config);
                        const auto encoded = words::encode_word(*text, alphabet);
                        const auto decoded = words::decode_word(encoded, alphabet);
                        if (ctx.json) {
                          ctx.out << nlohmann::json{{"codes", encoded.codes}, {"length", encoded.canonical_length()},
                                                    {"decoded", decoded}}
                                         .dump()
                                  << "\n";
                          return;
                        }
                        ctx.out << "codes";
                        for (auto c : encoded.codes) ctx.out << " " << c;
                        ctx.out << "\nlength " << encoded.canonical_length() << "\ndecoded " << decoded << "\n";
                      }});

  auto* segment = encode->add_subcommand("segment", "Build the frozen segment for a body and index");
  auto body = std::make_shared<std::string>();
  auto index = std::make_shared<std::uint64_t>(0);
  segment->add_option("--body", *body, "Segment body")->required();
  segment->add_option("--index", *index, "Time index")->required();
  registry.push_back({segment, [body, index](Context& ctx) {
                        const auto codec = codec_for(ctx.config);
                        const auto seg = codec.make_frozen_segment(*body, *index);
                        if (ctx.json) ctx.out << codec.to_json(seg).dump() << "\n";
                        else ctx.out << codec.text(seg) << "\n";
                      }});

  auto* member = encode->add_subcommand("member", "Test a frozen segment for membership in a totality");
  auto mbody = std::make_shared<std::string>();
  auto mindex = std::make_shared<std::uint64_t>(0);
  auto totality = std::make_shared<std::uint64_t>(0);
  member->add_option("--body", *mbody, "Segment body")->required();
  member->add_option("--index", *mindex, "Segment index")->required();
  member->add_option("--totality", *totality, "Totality index")->required();
  registry.push_back({member, [mbody, mindex, totality](Context& ctx) {
                        const auto codec = codec_for(ctx.config);
                        const bool in = codec.totality_membership(codec.make_frozen_segment(*mbody, *mindex), *totality);
                        if (ctx.json) ctx.out << nlohmann::json{{"member", in}}.dump() << "\n";
                        else ctx.out << (in ? "true" : "false") << "\n";
                      }});

  auto* paradigm = encode->add_subcommand("paradigm", "Build a developmental paradigm as JSON lines");
  auto selector = std::make_shared<std::string>();
  auto pattern = std::make_shared<std::string>();
  auto from = std::make_shared<std::uint64_t>(0);
  auto to = std::make_shared<std::optional<std::uint64_t>>();
  paradigm->add_option("--selector", *selector, "JSON object index -> body (file or inline)");
  paradigm->add_option("--pattern", *pattern, "Body pattern with {i}, used for every index");
  paradigm->add_option("--from", *from, "First index");
  paradigm->add_option("--to", *to, "Last index (inclusive)");
  registry.push_back({paradigm, [selector, pattern, from, to](Context& ctx) {
                        const auto codec = codec_for(ctx.config);
                        std::map<std::uint64_t, std::string> bodies;
                        if (!selector->empty())
                          for (const auto& [k, v] : load_json_arg(*selector).items())
                            bodies[std::stoull(k)] = v.get<std::string>();
                        words::IndexRange range = to->has_value() ? words::IndexRange{*from, **to, false}
                                                                  : words::IndexRange::none();
                        if (!pattern->empty() && to->has_value())
                          for (std::uint64_t i = *from; i <= **to; ++i) {
                            std::string b = *pattern;
                            for (auto p = b.find("{i}"); p != std::string::npos; p = b.find("{i}"))
                              b.replace(p, 3, std::to_string(i));
                            bodies[i] = b;
                          }
                        for (const auto& seg : codec.build_paradigm(bodies, range).segments)
                          ctx.out << codec.to_json(seg).dump() << "\n";
                      }});

  auto* tmpl = encode->add_subcommand("template", "Instantiate a sentence template with a slot value");
  auto sentence = std::make_shared<std::string>("kinetic");
  auto value = std::make_shared<std::string>();
  tmpl->add_option("--sentence", *sentence, "kinetic, total, or a sentence containing {n}");
  tmpl->add_option("--value", *value, "Slot value: a natural or a series such as W")->required();
  registry.push_back({tmpl, [sentence, value](Context& ctx) {
                        const auto inst = words::instantiate_template(
                            sentence_for(*sentence), hyper::parse_hyperreal(*value), alphabet_for(ctx.config));
                        if (ctx.json) {
                          ctx.out << inst.to_json().dump() << "\n";
                          return;
                        }
                        ctx.out << inst.rendered << "\nsubtle";
                        for (auto p : inst.subtle_positions) ctx.out << " " << p;
                        ctx.out << "\n";
                      }});

  auto* choices = encode->add_subcommand("choices", "Enumerate choice sets over finite samples");
  auto samples = std::make_shared<std::vector<std::string>>();
  auto exactly = std::make_shared<std::optional<std::size_t>>();
  choices->add_option("--sample", *samples, "Comma-separated sample; repeat for several")->required();
  choices->add_option("--exactly", *exactly, "Choose all subsets of this size from a single sample");
  registry.push_back({choices, [samples, exactly](Context& ctx) {
                        std::vector<std::set<std::string>> sets;
                        for (const auto& s : *samples) {
                          const auto items = split_list(s, ',');
                          sets.emplace_back(items.begin(), items.end());
                        }
                        const auto selector =
                            exactly->has_value() ? words::ChoiceSelector::of_size(**exactly) : words::ChoiceSelector::all();
                        for (const auto& set : words::enumerate_choice_sets(sets, selector)) {
                          if (ctx.json) {
                            ctx.out << nlohmann::json(set).dump() << "\n";
                            continue;
                          }
                          ctx.out << "{";
                          for (std::size_t i = 0; i < set.size(); ++i) ctx.out << (i ? ", " : "") << set[i];
                          ctx.out << "}\n";
                        }
                      }});
}

void register_suite_command(CLI::App& app, Registry& registry) {
  auto* suite = app.add_subcommand("suite", "Run the acceptance suites and print a pass/fail table");
  auto all = std::make_shared<bool>(false);
  auto seed = std::make_shared<std::optional<std::uint64_t>>();
  auto only = std::make_shared<std::vector<int>>();
  suite->add_flag("--all", *all, "Run every criterion");
  suite->add_option("--seed", *seed, "Seed for randomized suites");
  suite->add_option("--criterion", *only, "Run only these criteria")->check(CLI::Range(1, verify::kCriterionCount));
  registry.push_back({suite, [all, seed, only](Context& ctx) {
                        const std::uint64_t s = seed->value_or(ctx.config.seed);
                        std::vector<int> ids = *only;
                        if (*all || ids.empty())
                          for (int id = 1; id <= verify::kCriterionCount; ++id) ids.push_back(id);
                        std::sort(ids.begin(), ids.end());
                        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
                        bool ok = true;
                        for (int id : ids) {
                          const auto r = verify::run_criterion(id, s);
                          ok = ok && r.pass;
                          if (ctx.json)
                            ctx.out << nlohmann::json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}}.dump()
                                    << "\n";
                          else
                            ctx.out << verify::format_result(r) << "\n";
                        }
                        if (!ok) fail(Errc::InvalidArgument, "acceptance suite has failures");
                      }});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deduction, infinitesimal arithmetic and encoding toolkit", "ultralogic-lab"};
  app.require_subcommand(1);
  std::string config_path;
  bool json = false;
  std::optional<int> order;
  std::optional<unsigned> digits;
  app.add_option("--config", config_path, "JSON config file (default: $ULTRALOGIC_CONFIG)");
  app.add_flag("--json", json, "Emit JSON records");
  app.add_option("--order", order, "Series truncation order K (>= 2)");
  app.add_option("--digits", digits, "Decimal precision in digits (>= 20)");

  Registry registry;
  register_word_commands(app, registry);
  register_logic_commands(app, registry);
  register_numeric_commands(app, registry);
  register_suite_command(app, registry);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    Context ctx{RunConfig{}, json, out, err};
    if (config_path.empty())
      if (const char* env = std::getenv("ULTRALOGIC_CONFIG"); env != nullptr && *env != '\0') config_path = env;
    if (!config_path.empty()) ctx.config = RunConfig::load(config_path);
    if (order) ctx.config.truncation_order = *order;
    if (digits) ctx.config.decimal_digits = *digits;
    ctx.config.apply();
    for (const auto& command : registry)
      if (command.app->parsed()) {
        command.run(ctx);
        return kSuccess;
      }
    err << "no command selected\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace ulab::cli
