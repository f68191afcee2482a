#include "ulab/words/alphabet.hpp"

#include "ulab/error.hpp"

#include <fstream>

namespace ulab::words {

std::vector<std::string> split_utf8(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    if (lead < 0x80) len = 1;
    else if ((lead & 0xE0) == 0xC0) len = 2;
    else if ((lead & 0xF0) == 0xE0) len = 3;
    else if ((lead & 0xF8) == 0xF0) len = 4;
    else fail(Errc::ParseError, "malformed UTF-8 at byte " + std::to_string(i));
    if (i + len > text.size()) fail(Errc::ParseError, "truncated UTF-8 at byte " + std::to_string(i));
    for (std::size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80)
        fail(Errc::ParseError, "malformed UTF-8 at byte " + std::to_string(i + k));
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) fail(Errc::InvalidArgument, "alphabet is empty");
  for (Code c = 0; c < symbols_.size(); ++c) {
    const std::string& s = symbols_[c];
    if (split_utf8(s).size() != 1) fail(Errc::InvalidArgument, "alphabet symbol '" + s + "' is not one codepoint");
    if (!codes_.emplace(s, c).second) fail(Errc::InvalidArgument, "duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::standard() {
  std::vector<std::string> symbols;
  for (char c = ' '; c <= '~'; ++c) symbols.emplace_back(1, c);
  for (const char* extra : {"α", "′", "ζ", "ν", "λ", "ω"}) symbols.emplace_back(extra);
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::from_text(std::string_view symbols) { return Alphabet(split_utf8(symbols)); }

Alphabet Alphabet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open alphabet " + path.string());
  std::vector<std::string> symbols;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    symbols.push_back(line);
  }
  return Alphabet(std::move(symbols));
}

const std::string& Alphabet::symbol(Code code) const {
  if (!readable(code)) fail(Errc::SubtleSymbol, "code " + std::to_string(code) + " has no alphabet symbol");
  return symbols_[code];
}

std::optional<Code> Alphabet::code(std::string_view symbol) const {
  if (auto it = codes_.find(std::string(symbol)); it != codes_.end()) return it->second;
  return std::nullopt;
}

}  // namespace ulab::words
