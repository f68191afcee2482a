#pragma once

#include "ulab/config.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace ulab::cli {

enum ExitCode { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

struct Context {
  RunConfig config;
  bool json = false;
  std::ostream& out;
  std::ostream& err;
};

/// A leaf subcommand and the action bound to it.
struct Command {
  CLI::App* app;
  std::function<void(Context&)> run;
};

using Registry = std::vector<Command>;

void register_word_commands(CLI::App& app, Registry& registry);
void register_logic_commands(CLI::App& app, Registry& registry);
void register_numeric_commands(CLI::App& app, Registry& registry);
void register_suite_command(CLI::App& app, Registry& registry);

/// One row per library operation: the operation and an invocation that reaches it.
struct DispatchEntry {
  std::string module;
  std::string operation;
  std::vector<std::string> argv;  ///< arguments after the program name
};

const std::vector<DispatchEntry>& dispatch_table();

/// Runs the program on argv (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulab::cli
