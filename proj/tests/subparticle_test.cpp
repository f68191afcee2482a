#include "support.hpp"

#include "ulab/hyper/expr.hpp"
#include "ulab/hyper/kernel.hpp"
#include "ulab/subp/coin.hpp"
#include "ulab/subp/primes.hpp"
#include "ulab/subp/subparticle.hpp"

#include <random>

namespace {

using namespace ulab;
using namespace ulab::subp;
using hyper::Scalar;

const HyperReal e = HyperReal::epsilon();
const HyperReal W = HyperReal::omega();
HyperReal h(std::string_view text) { return hyper::parse_hyperreal(text); }

Scheme scheme(int f = 2) {
  Scheme s;
  s.characteristic_count = f;
  return s;
}

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(Primes, Basics) {
  EXPECT_EQ(nth_prime(1), 2U);
  EXPECT_EQ(nth_prime(6), 13U);
  EXPECT_EQ(nth_prime(1000), 7919U);
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(7917));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(prime_count(100), 25U);
  const auto f = factorize(80080, 100);
  EXPECT_EQ(f.factors, (std::map<BigInt, BigInt>{{2, 4}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}));
  EXPECT_EQ(f.remainder, 1);
  EXPECT_EQ(factorize(BigInt(2 * 10007), 100).remainder, 10007);
}

TEST(Scheme, PrimeRoles) {
  const auto s = scheme(2);
  EXPECT_EQ(s.characteristic_prime(1), 2U);
  EXPECT_EQ(s.characteristic_prime(2), 3U);
  EXPECT_ERRC(s.characteristic_prime(3), Errc::CharOutOfRange);
  EXPECT_EQ(s.naming_prime(1), 5U);
  EXPECT_EQ(s.naming_index(11), 3U);
  EXPECT_ERRC(s.naming_index(2), Errc::NameNotInK);
  EXPECT_ERRC(s.naming_index(15), Errc::NameNotInK);
  EXPECT_EQ(s.coordinate_for(1), 3);
}

TEST(NewUltrasubparticle, Baseline) {
  const auto p = new_ultrasubparticle(scheme(), {Name::Kind::prime, 11}, 6);
  EXPECT_EQ(p.a2, HyperReal(1));
  EXPECT_EQ(p.coords, (std::map<int, HyperReal>{{3, e}, {4, -e}, {5, e}, {6, -e}}));
  EXPECT_EQ(p.a1.value(scheme()), BigInt(11));
  EXPECT_ERRC(new_ultrasubparticle(scheme(), {Name::Kind::prime, 2}, 6), Errc::NameNotInK);
  const auto by_index = new_ultrasubparticle(scheme(), {Name::Kind::k_index, 3}, 4);
  EXPECT_EQ(by_index.a1, Identifier::naming(11));
  EXPECT_EQ(by_index.a2, HyperReal(1));
}

TEST(FormIntermediate, ToyIdentifier) {
  const auto p = form_intermediate(scheme(), 1, BigInt(4), big({5, 7, 11, 13}), 1, 6);
  EXPECT_EQ(p.a1.value(scheme()), BigInt(80080));
  EXPECT_EQ(p.coord(3), HyperReal(4) * e);
  EXPECT_ERRC(form_intermediate(scheme(), 3, BigInt(4), {}, 1, 6), Errc::CharOutOfRange);
  EXPECT_ERRC(form_intermediate(scheme(), 1, BigInt(4), big({3}), 1, 6), Errc::NameNotInK);
}

TEST(FormIntermediate, HyperMass) {
  const Rational m0(3, 2);
  const auto p = form_intermediate(scheme(), 1, m0, {{1, hyper::hypernat_for(m0)}}, 1, 6);
  EXPECT_EQ(hyper::st(p.coord(3)), Scalar(m0));
  EXPECT_EQ(hyper::classify(p.a2), hyper::Magnitude::unlimited);
  EXPECT_FALSE(p.a1.is_toy());
  EXPECT_FALSE(p.a1.value(scheme()).has_value());
  EXPECT_ERRC(form_intermediate(scheme(), 1, Rational(0), std::vector<KBlock>{}, 1, 6), Errc::InvalidArgument);
}

TEST(Combine, ProductOfIdentifiers) {
  const auto a = form_intermediate(scheme(), 1, BigInt(4), big({5, 7, 11, 13}), 1, 6);
  const auto b = form_intermediate(scheme(), 2, BigInt(2), big({17}), 1, 6);
  EXPECT_EQ(b.a1.value(scheme()), BigInt(153));
  const auto c = combine({a, b});
  EXPECT_EQ(c.a1.value(scheme()), BigInt(80080) * 153);
  EXPECT_EQ(combine({a}).a1, a.a1);
  EXPECT_EQ(combine({a}).coords, a.coords);
  EXPECT_ERRC(combine({a, form_intermediate(scheme(), 1, BigInt(1), {}, 1, 5)}), Errc::DimensionMismatch);
}

TEST(Combine, MassesAddUnderStandardPart) {
  const Rational r1(1, 3), r2(5, 4);
  const auto a = form_intermediate(scheme(), 1, r1, {{1, 2}}, 1, 6);
  const auto b = form_intermediate(scheme(), 1, r2, {{3, 1}}, 1, 6);
  EXPECT_EQ(hyper::st(combine({a, b}).coord(3)), Scalar(r1 + r2));
}

SubparticleRep random_toy(std::mt19937_64& rng, const Scheme& s) {
  std::vector<SubparticleRep> parts;
  const int chars = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.characteristic_count));
  for (int i = 1; i <= chars; ++i) {
    std::set<BigInt> naming;
    for (auto k = rng() % 7; k > 0; --k) naming.insert(BigInt(s.naming_prime(1 + rng() % 40)));
    parts.push_back(form_intermediate(s, i, BigInt(1 + rng() % 9), {naming.begin(), naming.end()},
                                      rng() % 2 ? 1 : -1, 8));
  }
  std::shuffle(parts.begin(), parts.end(), rng);
  return combine(parts);
}

TEST(Combine, AssociativeAndCommutative) {
  std::mt19937_64 rng(89);
  const auto s = scheme(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_toy(rng, s), y = random_toy(rng, s), z = random_toy(rng, s);
    const auto left = combine({combine({x, y}), z});
    const auto right = combine({x, combine({y, z})});
    EXPECT_EQ(left.a1, right.a1);
    EXPECT_EQ(left.coords, right.coords);
    EXPECT_EQ(combine({x, y}).a1, combine({y, x}).a1);
    EXPECT_EQ(combine({x, y}).coords, combine({y, x}).coords);
    EXPECT_EQ(combine({x, y}).a1.value(s), *x.a1.value(s) * *y.a1.value(s));
  }
}

TEST(Perturbations, InvisibleAfterProjection) {
  const Rational m0(7, 5);
  const auto p = form_intermediate(scheme(), 1, m0, {{1, 1}}, 1, 6);
  const auto moved = add_perturbations(p, {e * e, HyperReal(-3) * e}, 3);
  EXPECT_EQ(hyper::st(moved.coord(3)), Scalar(m0));
  EXPECT_EQ(add_perturbations(p, {}, 3).coords, p.coords);
  EXPECT_ERRC(add_perturbations(p, {HyperReal(1)}, 3), Errc::NotInfinitesimal);
  const auto before = project_standard(p);
  const auto after = project_standard(add_perturbations(p, {e, h("e^3")}, 5));
  EXPECT_EQ(before.coords, after.coords);
  EXPECT_EQ(before.zeroed, after.zeroed);
}

TEST(Project, Examples) {
  const Rational m0(2);
  const auto p = form_intermediate(scheme(), 1, m0, {{1, 1}}, 1, 6);
  const auto proj = project_standard(p);
  EXPECT_EQ(proj.coords, (std::map<int, Scalar>{{3, Scalar(m0)}}));
  EXPECT_EQ(proj.zeroed, (std::set<int>{4, 5, 6}));
  const auto pure = project_standard(new_ultrasubparticle(scheme(), {Name::Kind::prime, 11}, 6));
  EXPECT_TRUE(pure.coords.empty());
  EXPECT_EQ(pure.zeroed.size(), 4U);
  const auto hot = apply_diagonal({{4, hyper::NatLike(W * W)}}, p);
  EXPECT_ERRC(project_standard(hot), Errc::UnlimitedCoordinate);
}

TEST(Decode, Examples) {
  const auto d = decode(scheme(), 80080);
  ASSERT_EQ(d.characteristics.size(), 1U);
  EXPECT_EQ(d.characteristics[0].i, 1);
  EXPECT_EQ(d.characteristics[0].exponent, hyper::NatLike(4));
  EXPECT_EQ(d.naming_primes, (std::map<BigInt, BigInt>{{5, 1}, {7, 1}, {11, 1}, {13, 1}}));
  const auto j = decode(scheme(), 27);
  ASSERT_EQ(j.characteristics.size(), 1U);
  EXPECT_EQ(j.characteristics[0].i, 2);
  EXPECT_EQ(j.characteristics[0].exponent, hyper::NatLike(3));
  EXPECT_TRUE(j.naming_primes.empty());
  EXPECT_ERRC(decode(scheme(), BigInt(2) * 1000003), Errc::NonFactorable);
}

TEST(Decode, HyperIdentifierGivesStandardRatio) {
  const auto p = form_intermediate(scheme(), 2, Rational(5, 3), {{4, 7}}, 1, 6);
  const auto d = decode(p.a1);
  ASSERT_EQ(d.characteristics.size(), 1U);
  ASSERT_TRUE(d.characteristics[0].r.has_value());
  EXPECT_EQ(*d.characteristics[0].r, Scalar(Rational(5, 3)));
  ASSERT_EQ(d.blocks.size(), 1U);
  EXPECT_EQ(d.blocks[0].start, 4U);
}

TEST(Decode, RoundTripRandomToyEntities) {
  std::mt19937_64 rng(97);
  const auto s = scheme(4);
  std::set<BigInt> ids;
  for (int trial = 0; trial < 100; ++trial) {
    std::map<int, BigInt> exponents;
    std::map<BigInt, BigInt> naming;
    std::vector<SubparticleRep> parts;
    for (int i = 1; i <= 4; ++i) {
      if (rng() % 2 == 0 && i > 1) continue;
      const BigInt lambda(1 + rng() % 6);
      std::set<BigInt> primes;
      for (auto k = rng() % 7; k > 0; --k) primes.insert(BigInt(s.naming_prime(1 + rng() % 30)));
      parts.push_back(form_intermediate(s, i, lambda, {primes.begin(), primes.end()}, 1, 8));
      exponents[i] += lambda;
      for (const auto& p : primes) naming[p] += 1;
    }
    const auto entity = combine(parts);
    const BigInt id = *entity.a1.value(s);
    ids.insert(id);
    const auto d = decode(s, id);
    std::map<int, BigInt> got;
    for (const auto& c : d.characteristics) got[c.i] = *c.exponent.as_natural();
    EXPECT_EQ(got, exponents);
    EXPECT_EQ(d.naming_primes, naming);
    // decoding the factored form agrees with decoding the integer
    EXPECT_EQ(decode(entity.a1).naming_primes, naming);
  }
  EXPECT_GT(ids.size(), 90U);
}

TEST(Decode, DistinctEntitiesHaveDistinctIdentifiers) {
  std::mt19937_64 rng(101);
  const auto s = scheme(3);
  std::map<BigInt, std::pair<std::map<int, BigInt>, std::set<BigInt>>> seen;
  for (int trial = 0; trial < 300; ++trial) {
    std::map<int, BigInt> exponents;
    std::set<BigInt> primes;
    for (auto k = rng() % 4; k > 0; --k) primes.insert(BigInt(s.naming_prime(1 + rng() % 10)));
    const int i = 1 + static_cast<int>(rng() % 3);
    const BigInt lambda(1 + rng() % 4);
    exponents[i] = lambda;
    const BigInt id = *form_intermediate(s, i, lambda, {primes.begin(), primes.end()}, 1, 6).a1.value(s);
    const auto content = std::make_pair(exponents, primes);
    const auto [it, fresh] = seen.emplace(id, content);
    if (!fresh) {
      EXPECT_EQ(it->second, content);
    }
  }
}

TEST(Decode, CombineIsMergeOfDecodes) {
  std::mt19937_64 rng(103);
  const auto s = scheme(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_toy(rng, s), y = random_toy(rng, s);
    const auto dx = decode(s, *x.a1.value(s)), dy = decode(s, *y.a1.value(s));
    const auto dxy = decode(s, *combine({x, y}).a1.value(s));
    auto merged = dx.naming_primes;
    for (const auto& [p, m] : dy.naming_primes) merged[p] += m;
    EXPECT_EQ(dxy.naming_primes, merged);
    std::map<int, BigInt> chars;
    for (const auto* d : {&dx, &dy})
      for (const auto& c : d->characteristics) chars[c.i] += *c.exponent.as_natural();
    std::map<int, BigInt> got;
    for (const auto& c : dxy.characteristics) got[c.i] = *c.exponent.as_natural();
    EXPECT_EQ(got, chars);
  }
}

TEST(Diagonal, MatchesPipelineCoordsButNotIdentifier) {
  const auto usp = new_ultrasubparticle(scheme(), {Name::Kind::prime, 5}, 6);
  const Rational r(9, 7);
  const auto lambda = hyper::hypernat_for(r);
  const auto diag = apply_diagonal({{3, lambda}}, usp);
  const auto pipeline = form_intermediate(scheme(), 1, r, {{1, lambda}}, 1, 6);
  EXPECT_EQ(diag.coords, pipeline.coords);
  EXPECT_FALSE(diag.a1 == pipeline.a1);
  EXPECT_EQ(apply_diagonal({}, usp).coords, usp.coords);
}

TEST(KineticEnergy, Examples) {
  const auto tiny = ultrafast_ke(h("e^4"), W);
  EXPECT_EQ(tiny, e * e / HyperReal(2));
  EXPECT_EQ(hyper::classify(tiny), hyper::Magnitude::infinitesimal);
  const HyperReal planck(Scalar(Rational(663, 100)));
  EXPECT_EQ(ultrafast_ke(HyperReal(2) * planck * e * e, W), planck);
  EXPECT_TRUE(ultrafast_ke(HyperReal(0), W).is_zero());
}

TEST(Coin, Examples) {
  EXPECT_EQ(coin_sequence(Rational(1, 3), 4), "THTH");
  EXPECT_EQ(coin_sequence(Rational(5, 16), 4), "THTH");
  EXPECT_EQ(coin_sequence(Rational(1, 2), 5), "HHHHH");
  EXPECT_ERRC(coin_sequence(Rational(0), 3), Errc::OutOfUnitInterval);
  EXPECT_ERRC(coin_sequence(Rational(1), 3), Errc::OutOfUnitInterval);
  EXPECT_ERRC(coin_sequence(Rational(1, 3), 0), Errc::InvalidArgument);
}

TEST(Coin, MatchesDirectIteration) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const BigInt den(1 + rng() % 1000000);
    const Rational x(BigInt(1 + rng() % 1000000) % den, den);
    if (x == 0) continue;
    const auto flips = coin_sequence(x, 64);
    Rational power = x;
    for (std::size_t k = 0; k < flips.size(); ++k) {
      power *= 2;
      const Rational frac = power - Rational(hyper::floor_of(power));
      ASSERT_EQ(flips[k], frac < Rational(1, 2) ? 'H' : 'T');
    }
  }
}

TEST(Coin, StatisticsForWideDenominators) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const BigInt den = BigInt(rng() | 1U) | (BigInt(1) << 63);
    const Rational x(BigInt(rng()) % den, den);
    const auto s = coin_statistics(coin_sequence(x, 10000));
    EXPECT_EQ(s.flips, 10000U);
    EXPECT_TRUE(s.frequency_ok) << s.head_fraction;
    EXPECT_TRUE(s.runs_ok) << s.runs_z;
  }
}

TEST(Coin, StatisticsFlagDegenerateSequences) {
  const auto periodic = coin_statistics(coin_sequence(Rational(1, 3), 1000));
  EXPECT_TRUE(periodic.frequency_ok);
  EXPECT_FALSE(periodic.runs_ok);
  const auto constant = coin_statistics(coin_sequence(Rational(1, 2), 1000));
  EXPECT_FALSE(constant.frequency_ok);
}

TEST(EntityJson, BuildsFromRecords) {
  RunConfig config;
  const auto s = Scheme::from_config(config);
  const auto toy = entity_from_json(nlohmann::json::parse(
      R"({"mode":"toy","f":2,"characteristics":[{"i":1,"lambda":4}],"naming":{"primes":[5,7,11,13]}})"), s);
  EXPECT_EQ(toy.a1.value(s), BigInt(80080));
  EXPECT_EQ(toy.dims, 6);
  const auto hyper_entity = entity_from_json(nlohmann::json::parse(
      R"({"mode":"hyper","characteristics":[{"i":1,"r":"1/2"},{"i":2,"r":3,"sign":-1}],"naming":{"blocks":[[1,"W"]]}})"), s);
  EXPECT_EQ(hyper::st(hyper_entity.coord(3)), Scalar(Rational(1, 2)));
  EXPECT_EQ(hyper::st(hyper_entity.coord(4)), Scalar(-3));
  const auto j = to_json(toy, s, config);
  EXPECT_EQ(j.at("a1_value"), "80080");
  EXPECT_EQ(j.at("coords").at("3").at("quality"), "location x");
  EXPECT_ERRC(entity_from_json(nlohmann::json::parse(R"({"mode":"odd","characteristics":[]})"), s), Errc::ParseError);
}

}  // namespace
