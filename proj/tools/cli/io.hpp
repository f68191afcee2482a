#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace ulab::cli {

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
nlohmann::json load_json_arg(const std::string& arg);

/// Splits on a delimiter, trimming spaces; empty items are dropped.
std::vector<std::string> split_list(const std::string& text, char delimiter);

}  // namespace ulab::cli
