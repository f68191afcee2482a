#include "ulab/logic/formula.hpp"

#include "ulab/error.hpp"

#include <cctype>

namespace ulab::logic {

Formula Formula::atom(std::string name) {
  if (name.empty()) fail(Errc::InvalidArgument, "atom name is empty");
  return Formula(std::make_shared<const Node>(Node{Kind::atom, std::move(name), nullptr, nullptr, 1}));
}

Formula Formula::conj(Formula left, Formula right) {
  const std::size_t size = left.size() + right.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Kind::conj, {}, std::make_shared<const Formula>(std::move(left)),
                                                   std::make_shared<const Formula>(std::move(right)), size}));
}

Formula Formula::impl(Formula left, Formula right) {
  const std::size_t size = left.size() + right.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Kind::impl, {}, std::make_shared<const Formula>(std::move(left)),
                                                   std::make_shared<const Formula>(std::move(right)), size}));
}

const Formula& Formula::left() const {
  if (is_atom()) fail(Errc::InvalidArgument, "atom has no operands");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (is_atom()) fail(Errc::InvalidArgument, "atom has no operands");
  return *node_->right;
}

std::vector<std::string> Formula::atom_sequence() const {
  if (is_atom()) return {name()};
  auto out = left().atom_sequence();
  const auto rest = right().atom_sequence();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::set<std::string> Formula::atoms() const {
  const auto seq = atom_sequence();
  return {seq.begin(), seq.end()};
}

std::string Formula::str() const {
  switch (kind()) {
    case Kind::atom:
      return name();
    case Kind::conj: {
      std::string l = left().str();
      std::string r = right().str();
      if (left().is_impl()) l = "(" + l + ")";
      if (!right().is_atom()) r = "(" + r + ")";
      return l + " & " + r;
    }
    case Kind::impl: {
      std::string l = left().str();
      if (left().is_impl()) l = "(" + l + ")";
      return l + " -> " + right().str();
    }
  }
  return {};
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_atom()) return a.name() <=> b.name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Formula implication() {
    Formula left = conjunction();
    if (accept("->")) return Formula::impl(std::move(left), implication());
    return left;
  }

  Formula conjunction() {
    Formula f = primary();
    while (accept("&")) f = Formula::conj(std::move(f), primary());
    return f;
  }

  Formula primary() {
    if (accept("(")) {
      Formula inner = implication();
      if (!accept(")")) error("expected ')'");
      return inner;
    }
    skip_space();
    const std::size_t start = pos_;
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    error(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.is_conj()) {
    collect_conjuncts(f.left(), out);
    collect_conjuncts(f.right(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

Formula left_conjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) fail(Errc::InvalidArgument, "conjunction of nothing");
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::conj(std::move(f), parts[i]);
  return f;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  collect_conjuncts(f, out);
  return out;
}

bool is_left_ordered(const Formula& f) {
  if (!f.is_conj()) return false;
  const Formula* cur = &f;
  while (cur->is_conj()) {
    if (cur->right().is_conj()) return false;
    cur = &cur->left();
  }
  return true;
}

std::string to_string(const FormulaSet& set) {
  std::string out = "{";
  for (const auto& f : set) {
    if (out.size() > 1) out += ", ";
    out += f.str();
  }
  return out + "}";
}

}  // namespace ulab::logic
