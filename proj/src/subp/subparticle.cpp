#include "ulab/subp/subparticle.hpp"

#include "ulab/error.hpp"
#include "ulab/hyper/expr.hpp"

#include <algorithm>
#include <sstream>

namespace ulab::subp {

using hyper::Magnitude;
using hyper::Scalar;

Scheme Scheme::from_config(const RunConfig& config) {
  Scheme s;
  s.characteristic_count = config.characteristic_count;
  s.characteristic_coordinate = config.characteristic_coordinate;
  s.prime_limit = config.prime_limit;
  return s;
}

void Scheme::require_characteristic(int i) const {
  if (i < 1 || i > characteristic_count)
    fail(Errc::CharOutOfRange,
         "characteristic " + std::to_string(i) + " outside [1, " + std::to_string(characteristic_count) + "]");
}

std::uint64_t Scheme::characteristic_prime(int i) const {
  require_characteristic(i);
  return nth_prime(static_cast<std::uint64_t>(i));
}

int Scheme::coordinate_for(int i) const {
  require_characteristic(i);
  if (auto it = characteristic_coordinate.find(i); it != characteristic_coordinate.end()) return it->second;
  return i + 2;
}

std::uint64_t Scheme::naming_prime(std::uint64_t k) const {
  if (k < 1) fail(Errc::NameNotInK, "K is indexed from 1");
  return nth_prime(static_cast<std::uint64_t>(characteristic_count) + k);
}

std::uint64_t Scheme::naming_index(const BigInt& prime) const {
  if (prime < 2 || prime > BigInt(std::numeric_limits<std::uint64_t>::max()) ||
      !is_prime(prime.convert_to<std::uint64_t>()))
    fail(Errc::NameNotInK, prime.str() + " is not prime");
  const auto p = prime.convert_to<std::uint64_t>();
  const std::uint64_t position = prime_count(p);
  if (position <= static_cast<std::uint64_t>(characteristic_count))
    fail(Errc::NameNotInK, prime.str() + " is a characteristic prime");
  return position - static_cast<std::uint64_t>(characteristic_count);
}

Identifier Identifier::naming(const BigInt& prime) {
  Identifier id;
  id.naming_[prime] = 1;
  return id;
}

Identifier Identifier::characteristic(int i, NatLike exponent) {
  Identifier id;
  if (!exponent.value().is_zero()) id.exponents_.emplace(i, std::move(exponent));
  return id;
}

Identifier Identifier::block(KBlock block) {
  Identifier id;
  if (!block.count.value().is_zero()) id.blocks_.push_back(std::move(block));
  return id;
}

bool Identifier::is_toy() const {
  if (!blocks_.empty()) return false;
  return std::all_of(exponents_.begin(), exponents_.end(), [](const auto& e) { return e.second.as_natural().has_value(); });
}

std::optional<BigInt> Identifier::value(const Scheme& scheme) const {
  if (!is_toy()) return std::nullopt;
  BigInt v = 1;
  for (const auto& [i, e] : exponents_) {
    const BigInt p = scheme.characteristic_prime(i);
    for (BigInt k = 0; k < *e.as_natural(); ++k) v *= p;
  }
  for (const auto& [p, m] : naming_)
    for (BigInt k = 0; k < m; ++k) v *= p;
  return v;
}

std::string Identifier::str(const Scheme& scheme) const {
  std::vector<std::string> parts;
  for (const auto& [i, e] : exponents_) {
    const std::string p = std::to_string(scheme.characteristic_prime(i));
    const auto n = e.as_natural();
    if (n && *n == 1) parts.push_back(p);
    else if (n) parts.push_back(p + "^" + n->str());
    else parts.push_back(p + "^(" + e.str() + ")");
  }
  for (const auto& [p, m] : naming_) parts.push_back(m == 1 ? p.str() : p.str() + "^" + m.str());
  for (const auto& b : blocks_) parts.push_back("K[" + std::to_string(b.start) + ", +" + b.count.str() + ")");
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " * " + parts[k];
  return out;
}

Identifier operator*(const Identifier& a, const Identifier& b) {
  Identifier out = a;
  for (const auto& [i, e] : b.exponents_) {
    auto it = out.exponents_.find(i);
    if (it == out.exponents_.end()) out.exponents_.emplace(i, e);
    else it->second = NatLike(it->second.value() + e.value());
  }
  for (const auto& [p, m] : b.naming_) out.naming_[p] += m;
  out.blocks_.insert(out.blocks_.end(), b.blocks_.begin(), b.blocks_.end());
  std::stable_sort(out.blocks_.begin(), out.blocks_.end(), [](const KBlock& x, const KBlock& y) {
    if (x.start != y.start) return x.start < y.start;
    return x.count.value() < y.count.value();
  });
  return out;
}

bool operator==(const Identifier& a, const Identifier& b) {
  return a.exponents_ == b.exponents_ && a.naming_ == b.naming_ && a.blocks_ == b.blocks_;
}

const HyperReal& SubparticleRep::coord(int index) const {
  const auto it = coords.find(index);
  if (it == coords.end()) fail(Errc::InvalidArgument, "no coordinate " + std::to_string(index));
  return it->second;
}

HyperReal baseline_coordinate(int index, int order) {
  return HyperReal::monomial(Scalar(index % 2 == 1 ? 1 : -1), 1, order);
}

namespace {

SubparticleRep blank(int dims) {
  if (dims < 3) fail(Errc::InvalidArgument, "a subparticle needs at least three coordinates");
  SubparticleRep p;
  p.dims = dims;
  p.a2 = HyperReal(1);
  for (int i = 3; i <= dims; ++i) p.coords.emplace(i, baseline_coordinate(i));
  return p;
}

int checked_sign(int sign) {
  if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "sign must be +1 or -1");
  return sign;
}

int characteristic_slot(const Scheme& scheme, int i, int dims) {
  const int slot = scheme.coordinate_for(i);
  if (slot > dims)
    fail(Errc::InvalidArgument, "characteristic " + std::to_string(i) + " maps to coordinate " +
                                    std::to_string(slot) + " beyond dims " + std::to_string(dims));
  return slot;
}

}  // namespace

SubparticleRep new_ultrasubparticle(const Scheme& scheme, const Name& name, int dims) {
  SubparticleRep p = blank(dims);
  BigInt prime = name.value;
  if (name.kind == Name::Kind::k_index) {
    if (name.value < 1) fail(Errc::NameNotInK, "K is indexed from 1");
    prime = scheme.naming_prime(name.value.convert_to<std::uint64_t>());
  }
  scheme.naming_index(prime);
  p.a1 = Identifier::naming(prime);
  return p;
}

SubparticleRep form_intermediate(const Scheme& scheme, int i, const BigInt& lambda,
                                 const std::vector<BigInt>& naming_primes, int sign, int dims) {
  scheme.require_characteristic(i);
  if (lambda < 1) fail(Errc::InvalidArgument, "lambda must be a positive natural");
  SubparticleRep p = blank(dims);
  const int slot = characteristic_slot(scheme, i, dims);
  Identifier id = Identifier::characteristic(i, NatLike(lambda));
  std::set<BigInt> seen;
  for (const auto& prime : naming_primes) {
    scheme.naming_index(prime);
    if (!seen.insert(prime).second) fail(Errc::InvalidArgument, "naming prime " + prime.str() + " repeats");
    id = id * Identifier::naming(prime);
  }
  p.a1 = std::move(id);
  p.a2 = HyperReal(Scalar(lambda));
  p.coords[slot] = HyperReal::monomial(Scalar(BigInt(lambda * checked_sign(sign))), 1);
  return p;
}

SubparticleRep form_intermediate(const Scheme& scheme, int i, const Rational& r, const std::vector<KBlock>& naming,
                                 int sign, int dims) {
  scheme.require_characteristic(i);
  if (r <= 0) fail(Errc::InvalidArgument, "r must be positive");
  SubparticleRep p = blank(dims);
  const int slot = characteristic_slot(scheme, i, dims);
  const NatLike lambda = hyper::hypernat_for(r);
  Identifier id = Identifier::characteristic(i, lambda);
  for (const auto& b : naming) {
    if (b.start < 1) fail(Errc::NameNotInK, "K is indexed from 1");
    id = id * Identifier::block(b);
  }
  p.a1 = std::move(id);
  p.a2 = lambda.value();
  p.coords[slot] = lambda.value() * HyperReal::epsilon() * HyperReal(checked_sign(sign));
  return p;
}

SubparticleRep combine(const std::vector<SubparticleRep>& parts) {
  if (parts.empty()) fail(Errc::InvalidArgument, "nothing to combine");
  SubparticleRep out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const SubparticleRep& p = parts[k];
    if (p.dims != out.dims)
      fail(Errc::DimensionMismatch, "dims " + std::to_string(p.dims) + " vs " + std::to_string(out.dims));
    for (auto& [index, value] : out.coords) value += p.coord(index);
    out.a2 += p.a2;
    out.a1 = out.a1 * p.a1;
  }
  return out;
}

SubparticleRep add_perturbations(const SubparticleRep& p, const std::vector<HyperReal>& zetas, int coordinate) {
  SubparticleRep out = p;
  HyperReal shift(0);
  for (const auto& z : zetas) {
    if (hyper::classify(z) != Magnitude::infinitesimal)
      fail(Errc::NotInfinitesimal, z.str() + " is not infinitesimal");
    shift += z;
  }
  out.coords[coordinate] = p.coord(coordinate) + shift;
  return out;
}

EntityProjection project_standard(const SubparticleRep& p) {
  EntityProjection out;
  for (const auto& [index, value] : p.coords) {
    switch (hyper::classify(value)) {
      case Magnitude::unlimited:
        fail(Errc::UnlimitedCoordinate, "coordinate " + std::to_string(index) + " is unlimited: " + value.str());
      case Magnitude::infinitesimal: out.zeroed.insert(index); break;
      case Magnitude::limited: out.coords.emplace(index, hyper::st(value)); break;
    }
  }
  return out;
}

Decoded decode(const Identifier& id) {
  Decoded out;
  for (const auto& [i, e] : id.characteristic_exponents()) {
    DecodedCharacteristic c{i, e, std::nullopt};
    if (e.is_unlimited()) c.r = hyper::st(e.value() * HyperReal::epsilon(e.value().order()));
    out.characteristics.push_back(std::move(c));
  }
  out.naming_primes = id.naming_primes();
  out.blocks = id.blocks();
  return out;
}

Decoded decode(const Scheme& scheme, const BigInt& value) {
  if (value < 1) fail(Errc::InvalidArgument, "identifiers are positive integers");
  const Factorization f = factorize(value, scheme.prime_limit);
  if (f.remainder != 1)
    fail(Errc::NonFactorable, "cofactor " + f.remainder.str() + " has no prime factor up to " +
                                  std::to_string(scheme.prime_limit));
  const BigInt last_characteristic = scheme.characteristic_prime(scheme.characteristic_count);
  Decoded out;
  for (const auto& [p, e] : f.factors) {
    if (p <= last_characteristic)
      out.characteristics.push_back({static_cast<int>(prime_count(p.convert_to<std::uint64_t>())), NatLike(e), std::nullopt});
    else
      out.naming_primes[p] = e;
  }
  return out;
}

std::string Decoded::str() const {
  std::ostringstream out;
  for (const auto& c : characteristics) {
    out << "characteristic " << c.i << " exponent " << c.exponent.str();
    if (c.r) out << " r " << c.r->str();
    out << "\n";
  }
  out << "constituents";
  for (const auto& [p, m] : naming_primes) out << " " << p << (m == 1 ? "" : "^" + m.str());
  for (const auto& b : blocks) out << " K[" << b.start << ", +" << b.count.str() << ")";
  out << "\n";
  return out.str();
}

SubparticleRep apply_diagonal(const std::map<int, NatLike>& lambdas, const SubparticleRep& usp) {
  SubparticleRep out = usp;
  for (const auto& [index, lambda] : lambdas) out.coords[index] = usp.coord(index) * lambda.value();
  return out;
}

HyperReal ultrafast_ke(const HyperReal& m, const HyperReal& v) {
  return HyperReal(Scalar(Rational(1, 2)), m.order()) * m * v * v;
}

namespace {

BigInt big_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) return BigInt(v.get<std::string>());
  fail(Errc::ParseError, "expected an integer, got " + v.dump());
}

NatLike natlike_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return NatLike(BigInt(v.get<long long>()));
  if (v.is_string()) return NatLike(hyper::parse_hyperreal(v.get<std::string>()));
  fail(Errc::ParseError, "expected a count, got " + v.dump());
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return hyper::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  return hyper::parse_rational(v.dump());
}

}  // namespace

SubparticleRep entity_from_json(const nlohmann::json& j, Scheme scheme) {
  try {
    if (j.contains("f")) scheme.characteristic_count = j.at("f").get<int>();
    if (scheme.characteristic_count < 1) fail(Errc::InvalidArgument, "f must be >= 1");
    const int dims = j.value("dims", 6);
    const std::string mode = j.value("mode", "toy");
    if (mode != "toy" && mode != "hyper") fail(Errc::ParseError, "mode must be toy or hyper");
    if (j.contains("name")) {
      return new_ultrasubparticle(scheme, Name{Name::Kind::prime, big_from_json(j.at("name"))}, dims);
    }
    const nlohmann::json shared = j.value("naming", nlohmann::json::object());
    std::vector<SubparticleRep> parts;
    for (const auto& c : j.at("characteristics")) {
      const nlohmann::json& naming = c.contains("naming") ? c.at("naming") : shared;
      const int i = c.at("i").get<int>();
      const int sign = c.value("sign", 1);
      if (mode == "toy") {
        std::vector<BigInt> primes;
        for (const auto& p : naming.value("primes", nlohmann::json::array())) primes.push_back(big_from_json(p));
        parts.push_back(form_intermediate(scheme, i, big_from_json(c.at("lambda")), primes, sign, dims));
      } else {
        std::vector<KBlock> blocks;
        for (const auto& b : naming.value("blocks", nlohmann::json::array()))
          blocks.push_back({b.at(0).get<std::uint64_t>(), natlike_from_json(b.at(1))});
        parts.push_back(form_intermediate(scheme, i, rational_from_json(c.at("r")), blocks, sign, dims));
      }
    }
    if (parts.empty()) fail(Errc::InvalidArgument, "entity needs a name or at least one characteristic");
    return combine(parts);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("entity JSON: ") + e.what());
  }
}

nlohmann::json to_json(const SubparticleRep& p, const Scheme& scheme, const RunConfig& config) {
  nlohmann::json coords = nlohmann::json::object();
  for (const auto& [index, value] : p.coords)
    coords[std::to_string(index)] = {{"value", value.str()}, {"quality", config.quality_name(index)}};
  nlohmann::json out = {{"dims", p.dims}, {"a1", p.a1.str(scheme)}, {"a2", p.a2.str()}, {"coords", coords}};
  if (const auto v = p.a1.value(scheme)) out["a1_value"] = v->str();
  return out;
}

}  // namespace ulab::subp
