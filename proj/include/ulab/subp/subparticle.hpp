#pragma once

#include "ulab/config.hpp"
#include "ulab/hyper/kernel.hpp"
#include "ulab/subp/primes.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ulab::subp {

using hyper::HyperReal;
using hyper::NatLike;
using hyper::Rational;

/// Characteristic primes J(1..f) are the first f primes; naming primes K are
/// all later primes, indexed from 1 in ascending order.
struct Scheme {
  int characteristic_count = 2;                  ///< f
  std::map<int, int> characteristic_coordinate;  ///< i -> coordinate index (default i + 2)
  std::uint64_t prime_limit = 100000;

  static Scheme from_config(const RunConfig& config);

  std::uint64_t characteristic_prime(int i) const;  ///< J(i); throws CharOutOfRange
  int coordinate_for(int i) const;                  ///< throws CharOutOfRange
  std::uint64_t naming_prime(std::uint64_t k) const;  ///< k-th member of K
  /// Position of a prime within K. Throws NameNotInK.
  std::uint64_t naming_index(const BigInt& prime) const;
  void require_characteristic(int i) const;
};

/// A run of consecutive naming primes K[start], ..., K[start + count - 1].
struct KBlock {
  std::uint64_t start = 1;
  NatLike count{0};
  friend bool operator==(const KBlock& a, const KBlock& b) { return a.start == b.start && a.count == b.count; }
};

/// A prime-factored name: characteristic primes with exponents, times naming content.
class Identifier {
 public:
  Identifier() = default;

  static Identifier naming(const BigInt& prime);
  static Identifier characteristic(int i, NatLike exponent);
  static Identifier block(KBlock block);

  const std::map<int, NatLike>& characteristic_exponents() const { return exponents_; }
  const std::map<BigInt, BigInt>& naming_primes() const { return naming_; }  ///< prime -> multiplicity
  const std::vector<KBlock>& blocks() const { return blocks_; }

  /// Finite exponents and no blocks.
  bool is_toy() const;
  /// The literal integer in toy mode.
  std::optional<BigInt> value(const Scheme& scheme) const;
  std::string str(const Scheme& scheme) const;

  friend Identifier operator*(const Identifier& a, const Identifier& b);
  friend bool operator==(const Identifier& a, const Identifier& b);

 private:
  std::map<int, NatLike> exponents_;
  std::map<BigInt, BigInt> naming_;
  std::vector<KBlock> blocks_;
};

/// A named coordinate vector a_1 (identifier), a_2 (count), a_3 ... a_dims.
struct SubparticleRep {
  Identifier a1;
  HyperReal a2;
  std::map<int, HyperReal> coords;
  int dims = 3;

  const HyperReal& coord(int index) const;
};

/// +e on odd indices, -e on even ones.
HyperReal baseline_coordinate(int index, int order = hyper::default_order());

struct Name {
  enum class Kind { prime, k_index };
  Kind kind = Kind::prime;
  BigInt value;
};

/// Throws NameNotInK, or InvalidArgument for dims < 3.
SubparticleRep new_ultrasubparticle(const Scheme& scheme, const Name& name, int dims);

/// Toy mode: finite lambda, explicit naming primes.
/// Coordinate of characteristic i becomes sign*lambda*e, a2 = lambda,
/// identifier = naming primes * J(i)^lambda. Throws CharOutOfRange, NameNotInK.
SubparticleRep form_intermediate(const Scheme& scheme, int i, const BigInt& lambda,
                                 const std::vector<BigInt>& naming_primes, int sign, int dims);

/// Hyper mode: lambda = r * Omega, naming kept as K-blocks.
SubparticleRep form_intermediate(const Scheme& scheme, int i, const Rational& r, const std::vector<KBlock>& naming,
                                 int sign, int dims);

/// Coordinatewise sums, a2 summed, identifiers multiplied. Throws DimensionMismatch.
SubparticleRep combine(const std::vector<SubparticleRep>& parts);

/// Shifts one coordinate by a sum of infinitesimals. Throws NotInfinitesimal.
SubparticleRep add_perturbations(const SubparticleRep& p, const std::vector<HyperReal>& zetas, int coordinate);

struct EntityProjection {
  std::map<int, hyper::Scalar> coords;  ///< limited, non-infinitesimal coordinates
  std::set<int> zeroed;                 ///< infinitesimal coordinates
};

/// Throws UnlimitedCoordinate.
EntityProjection project_standard(const SubparticleRep& p);

struct DecodedCharacteristic {
  int i = 0;
  NatLike exponent{0};
  std::optional<hyper::Scalar> r;  ///< st(exponent * e) for unlimited exponents
};

struct Decoded {
  std::vector<DecodedCharacteristic> characteristics;
  std::map<BigInt, BigInt> naming_primes;
  std::vector<KBlock> blocks;
  std::string str() const;
};

/// Reads a factored identifier.
Decoded decode(const Identifier& id);
/// Factorizes a toy identifier. Throws NonFactorable when a factor exceeds the
/// prime limit, InvalidArgument for values below 1.
Decoded decode(const Scheme& scheme, const BigInt& value);

/// Scales coordinates by the given diagonal entries; a1 and a2 are copied unchanged.
SubparticleRep apply_diagonal(const std::map<int, NatLike>& lambdas, const SubparticleRep& usp);

/// (1/2) m v^2
HyperReal ultrafast_ke(const HyperReal& m, const HyperReal& v);

/// Builds an entity from JSON:
/// {mode: "toy"|"hyper", f, dims, characteristics: [{i, lambda|r, sign, naming?}], naming: {primes|blocks}}.
/// A characteristic's own naming overrides the shared one.
SubparticleRep entity_from_json(const nlohmann::json& j, Scheme scheme);
nlohmann::json to_json(const SubparticleRep& p, const Scheme& scheme, const RunConfig& config);

}  // namespace ulab::subp
