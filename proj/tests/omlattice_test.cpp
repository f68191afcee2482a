#include "support.hpp"

#include "ulab/om/ortho_lattice.hpp"

#include <fstream>

namespace {

using namespace ulab;
using namespace ulab::om;

// Builds meet/join tables from a partial order given as a "below" relation.
OrthoLattice from_order(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers,
                        std::vector<Element> ortho) {
  const std::size_t n = names.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : covers) le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  auto bound = [&](std::size_t a, std::size_t b, bool lower) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      const bool ok = lower ? le[c][a] && le[c][b] : le[a][c] && le[b][c];
      if (!ok) continue;
      if (!best || (lower ? le[*best][c] : le[c][*best])) best = c;
    }
    return *best;
  };
  std::vector<std::vector<Element>> meet(n, std::vector<Element>(n)), join = meet;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = bound(a, b, true);
      join[a][b] = bound(a, b, false);
    }
  return OrthoLattice(std::move(names), meet, join, std::move(ortho), 0, n - 1);
}

// The hexagon: an ortholattice that is not orthomodular.
OrthoLattice hexagon() {
  // 0, x, y, y', x', 1 with x < y and y' < x'
  return from_order({"0", "x", "y", "y'", "x'", "1"},
                    {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 5}, {4, 5}}, {5, 4, 3, 2, 1, 0});
}

TEST(Builtins, BooleanAndMo2AreOrthomodular) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto b = OrthoLattice::boolean(n);
    EXPECT_EQ(b.size(), 1U << n);
    EXPECT_FALSE(validate_orthomodular(b).has_value()) << validate_orthomodular(b)->str(b);
  }
  const auto mo2 = OrthoLattice::mo2();
  EXPECT_EQ(mo2.size(), 6U);
  EXPECT_FALSE(validate_orthomodular(mo2).has_value());
}

TEST(Builtins, Mo2IsNotDistributive) {
  const auto l = OrthoLattice::mo2();
  const Element a = *l.find("a"), b = *l.find("b"), bp = *l.find("b'");
  EXPECT_NE(l.meet(a, l.join(b, bp)), l.join(l.meet(a, b), l.meet(a, bp)));
}

TEST(Validate, SelfOrthocomplementFails) {
  auto j = OrthoLattice::mo2().to_json();
  j["ortho"][1] = j["elements"][1];  // ortho(a) = a
  const auto l = OrthoLattice::from_json(j);
  const auto v = validate_orthomodular(l);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->law, "a^a'=0");
}

TEST(Validate, HexagonBreaksOrthomodularity) {
  const auto l = hexagon();
  const auto v = validate_orthomodular(l);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->law, "orthomodularity");
}

TEST(Validate, MalformedTables) {
  EXPECT_ERRC(OrthoLattice({"0", "1"}, {{0, 0}}, {{0, 1}, {1, 1}}, {1, 0}, 0, 1), Errc::MalformedTable);
  EXPECT_ERRC(OrthoLattice({"0", "1"}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 7}}, {1, 0}, 0, 1), Errc::MalformedTable);
  EXPECT_ERRC(OrthoLattice::from_json(nlohmann::json{{"elements", {"0"}}}), Errc::MalformedTable);
}

TEST(Json, RoundTripAndFile) {
  const auto mo2 = OrthoLattice::mo2();
  const auto back = OrthoLattice::from_json(mo2.to_json());
  EXPECT_EQ(back.to_json(), mo2.to_json());
  const auto path = std::filesystem::temp_directory_path() / "ulab_mo2_test.json";
  std::ofstream(path) << mo2.to_json().dump(2);
  EXPECT_EQ(OrthoLattice::load(path).to_json(), mo2.to_json());
  std::filesystem::remove(path);
}

TEST(Mittelstaedt, Examples) {
  const auto l = OrthoLattice::mo2();
  EXPECT_EQ(mittelstaedt(l, *l.find("a"), *l.find("b")), *l.find("a'"));
  for (const auto& lattice : {l, OrthoLattice::boolean(2), OrthoLattice::boolean(3)})
    for (Element a = 0; a < lattice.size(); ++a) {
      EXPECT_EQ(mittelstaedt(lattice, a, a), lattice.top());
      for (Element b = 0; b < lattice.size(); ++b) {
        EXPECT_EQ(mittelstaedt(lattice, lattice.meet(a, b), b), lattice.top());
        if (lattice.leq(a, b)) {
          EXPECT_EQ(mittelstaedt(lattice, a, b), lattice.top());
        }
      }
    }
}

TEST(Mittelstaedt, BooleanTopIffBelow) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto l = OrthoLattice::boolean(n);
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b) {
        EXPECT_EQ(mittelstaedt(l, a, b) == l.top(), l.leq(a, b));
        // classical a' v b
        EXPECT_EQ(mittelstaedt(l, a, b), l.join(l.ortho(a), b));
      }
  }
}

TEST(AxiomValidity, AllSchemataOnBuiltins) {
  for (const auto& l : {OrthoLattice::boolean(2), OrthoLattice::boolean(3), OrthoLattice::mo2()})
    for (int s = 1; s <= 4; ++s) {
      const auto r = axiom_validity(l, s);
      EXPECT_TRUE(r.valid) << "schema " << s;
      EXPECT_EQ(r.assignments, l.size() * l.size() * l.size());
    }
}

TEST(AxiomValidity, MutilatedTableReportsAssignment) {
  auto j = OrthoLattice::mo2().to_json();
  j["ortho"][1] = j["elements"][1];  // ortho(a) = a
  const auto l = OrthoLattice::from_json(j);
  const auto r = axiom_validity(l, 1);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.counterexample.size(), 3U);
  const Element x = l.meet(r.counterexample[0], r.counterexample[1]);
  EXPECT_NE(mittelstaedt(l, x, r.counterexample[0]), l.top());
}

TEST(AxiomValidity, RejectsUnknownSchema) {
  EXPECT_ERRC(axiom_validity(OrthoLattice::mo2(), 5), Errc::InvalidArgument);
}

}  // namespace
