#include "ulab/om/ortho_lattice.hpp"

#include "ulab/error.hpp"

#include <fstream>

namespace ulab::om {

OrthoLattice::OrthoLattice(std::vector<std::string> names, std::vector<std::vector<Element>> meet,
                           std::vector<std::vector<Element>> join, std::vector<Element> ortho, Element bottom,
                           Element top)
    : names_(std::move(names)), meet_(std::move(meet)), join_(std::move(join)), ortho_(std::move(ortho)),
      bottom_(bottom), top_(top) {
  const std::size_t n = names_.size();
  if (n == 0) fail(Errc::MalformedTable, "lattice has no elements");
  auto check_square = [n](const std::vector<std::vector<Element>>& t, const char* what) {
    if (t.size() != n) fail(Errc::MalformedTable, std::string(what) + " table has the wrong number of rows");
    for (const auto& row : t) {
      if (row.size() != n) fail(Errc::MalformedTable, std::string(what) + " table has a short row");
      for (Element e : row)
        if (e >= n) fail(Errc::MalformedTable, std::string(what) + " table entry out of range");
    }
  };
  check_square(meet_, "meet");
  check_square(join_, "join");
  if (ortho_.size() != n) fail(Errc::MalformedTable, "ortho table has the wrong length");
  for (Element e : ortho_)
    if (e >= n) fail(Errc::MalformedTable, "ortho table entry out of range");
  if (bottom_ >= n || top_ >= n) fail(Errc::MalformedTable, "bottom or top out of range");
}

OrthoLattice OrthoLattice::boolean(unsigned n) {
  if (n > 3) fail(Errc::InvalidArgument, "built-in Boolean lattices go up to 2^3");
  const std::size_t size = std::size_t{1} << n;
  const Element full = size - 1;
  std::vector<std::string> names;
  std::vector<std::vector<Element>> meet(size, std::vector<Element>(size)), join = meet;
  std::vector<Element> ortho(size);
  for (Element a = 0; a < size; ++a) {
    std::string name = "{";
    for (unsigned bit = 0; bit < n; ++bit)
      if (a >> bit & 1U) name += (name.size() > 1 ? "," : "") + std::to_string(bit + 1);
    names.push_back(name + "}");
    ortho[a] = full & ~a;
    for (Element b = 0; b < size; ++b) {
      meet[a][b] = a & b;
      join[a][b] = a | b;
    }
  }
  return OrthoLattice(std::move(names), std::move(meet), std::move(join), std::move(ortho), 0, full);
}

OrthoLattice OrthoLattice::mo2() {
  // 0, a, a', b, b', 1; the four atoms are pairwise incomparable
  constexpr Element zero = 0, one = 5;
  std::vector<std::string> names = {"0", "a", "a'", "b", "b'", "1"};
  std::vector<std::vector<Element>> meet(6, std::vector<Element>(6)), join = meet;
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      if (x == y) {
        meet[x][y] = join[x][y] = x;
      } else if (x == zero || y == zero) {
        meet[x][y] = zero;
        join[x][y] = x == zero ? y : x;
      } else if (x == one || y == one) {
        meet[x][y] = x == one ? y : x;
        join[x][y] = one;
      } else {
        meet[x][y] = zero;
        join[x][y] = one;
      }
    }
  std::vector<Element> ortho = {5, 2, 1, 4, 3, 0};
  return OrthoLattice(std::move(names), std::move(meet), std::move(join), std::move(ortho), zero, one);
}

std::optional<Element> OrthoLattice::find(const std::string& name) const {
  for (Element e = 0; e < names_.size(); ++e)
    if (names_[e] == name) return e;
  return std::nullopt;
}

OrthoLattice OrthoLattice::from_json(const nlohmann::json& j) {
  try {
    const auto names = j.at("elements").get<std::vector<std::string>>();
    auto index = [&names](const nlohmann::json& v) -> Element {
      const auto s = v.get<std::string>();
      for (Element e = 0; e < names.size(); ++e)
        if (names[e] == s) return e;
      fail(Errc::MalformedTable, "unknown element '" + s + "'");
    };
    auto table = [&](const char* key) {
      std::vector<std::vector<Element>> t;
      for (const auto& row : j.at(key)) {
        t.emplace_back();
        for (const auto& v : row) t.back().push_back(index(v));
      }
      return t;
    };
    std::vector<Element> ortho;
    for (const auto& v : j.at("ortho")) ortho.push_back(index(v));
    return OrthoLattice(names, table("meet"), table("join"), std::move(ortho), index(j.at("bottom")),
                        index(j.at("top")));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedTable, std::string("lattice JSON: ") + e.what());
  }
}

OrthoLattice OrthoLattice::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open lattice " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, "lattice " + path.string() + ": " + e.what());
  }
}

nlohmann::json OrthoLattice::to_json() const {
  auto table = [this](const std::vector<std::vector<Element>>& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t) {
      nlohmann::json r = nlohmann::json::array();
      for (Element e : row) r.push_back(names_[e]);
      rows.push_back(r);
    }
    return rows;
  };
  nlohmann::json ortho = nlohmann::json::array();
  for (Element e : ortho_) ortho.push_back(names_[e]);
  return {{"elements", names_}, {"meet", table(meet_)}, {"join", table(join_)},
          {"ortho", ortho},     {"bottom", names_[bottom_]}, {"top", names_[top_]}};
}

std::string Violation::str(const OrthoLattice& l) const {
  std::string out = law + " fails at";
  for (Element e : elements) out += " " + l.name(e);
  return out;
}

std::optional<Violation> validate_orthomodular(const OrthoLattice& l) {
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a) {
    if (l.meet(a, a) != a || l.join(a, a) != a) return Violation{"idempotence", {a}};
    if (l.meet(a, l.bottom()) != l.bottom() || l.join(a, l.top()) != l.top()) return Violation{"bounds", {a}};
    if (l.ortho(l.ortho(a)) != a) return Violation{"involution a''=a", {a}};
    if (l.meet(a, l.ortho(a)) != l.bottom()) return Violation{"a^a'=0", {a}};
    if (l.join(a, l.ortho(a)) != l.top()) return Violation{"a v a'=1", {a}};
    for (Element b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) return Violation{"commutativity", {a, b}};
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) return Violation{"absorption", {a, b}};
      if (l.ortho(l.meet(a, b)) != l.join(l.ortho(a), l.ortho(b))) return Violation{"De Morgan", {a, b}};
      if (l.leq(a, b) && l.join(a, l.meet(l.ortho(a), b)) != b) return Violation{"orthomodularity", {a, b}};
      for (Element c = 0; c < n; ++c) {
        if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c)) || l.join(l.join(a, b), c) != l.join(a, l.join(b, c)))
          return Violation{"associativity", {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

Element mittelstaedt(const OrthoLattice& l, Element a, Element b) { return l.join(l.ortho(a), l.meet(a, b)); }

SchemaResult axiom_validity(const OrthoLattice& l, int schema) {
  if (schema < 1 || schema > 4) fail(Errc::InvalidArgument, "schema must be 1..4");
  SchemaResult result;
  result.schema = schema;
  const std::size_t n = l.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Element antecedent = 0, consequent = 0;
        switch (schema) {
          case 1: antecedent = l.meet(a, b); consequent = a; break;
          case 2: antecedent = l.meet(a, b); consequent = b; break;
          case 3: antecedent = l.meet(a, l.meet(b, c)); consequent = l.meet(l.meet(a, b), c); break;
          case 4: antecedent = l.meet(l.meet(a, b), c); consequent = l.meet(a, l.meet(b, c)); break;
        }
        ++result.assignments;
        if (result.valid && mittelstaedt(l, antecedent, consequent) != l.top()) {
          result.valid = false;
          result.counterexample = {a, b, c};
        }
      }
  return result;
}

}  // namespace ulab::om
