#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulab {

/// Domain error categories shared by every module.
enum class Errc {
  // word_codec
  UnknownSymbol,
  EmptyWord,
  SubtleSymbol,
  MissingIndex,
  EmptySample,
  NonNatSlotValue,
  // logic_engine
  TooFewAtoms,
  DuplicateAtom,
  NotAnUltraword,
  // omlattice
  MalformedTable,
  // hyperkernel
  DivisionByZero,
  TruncationOverflow,
  Unlimited,
  NegativeInput,
  // glue
  OverlappingTransitions,
  NonPositiveDelta,
  OutOfDomain,
  OnPartitionPoint,
  AvoidSetBlocksEndpoints,
  SelectionHitsDiscontinuity,
  // subparticle
  NameNotInK,
  CharOutOfRange,
  DimensionMismatch,
  NotInfinitesimal,
  UnlimitedCoordinate,
  NonFactorable,
  OutOfUnitInterval,
  // shared
  ParseError,
  InvalidArgument,
  Io,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace ulab
