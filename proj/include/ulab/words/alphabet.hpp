#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ulab::words {

using Code = std::uint64_t;

/// Splits UTF-8 text into codepoint strings. Throws ParseError on malformed input.
std::vector<std::string> split_utf8(std::string_view text);

/// An ordered list of distinct single-codepoint symbols. A symbol's code is its index.
class Alphabet {
 public:
  /// Throws InvalidArgument on duplicates, empty lists, or multi-codepoint symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  /// Printable ASCII followed by a few non-ASCII symbols used in sentence templates.
  static Alphabet standard();
  static Alphabet from_text(std::string_view symbols);
  /// One symbol per line, UTF-8. Blank lines are skipped; a line holding one space declares the space.
  static Alphabet load(const std::filesystem::path& path);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(Code code) const;
  std::optional<Code> code(std::string_view symbol) const;
  bool readable(Code code) const { return code < symbols_.size(); }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Code> codes_;
};

}  // namespace ulab::words
