#include "ulab/error.hpp"

namespace ulab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::SubtleSymbol: return "SubtleSymbol";
    case Errc::MissingIndex: return "MissingIndex";
    case Errc::EmptySample: return "EmptySample";
    case Errc::NonNatSlotValue: return "NonNatSlotValue";
    case Errc::TooFewAtoms: return "TooFewAtoms";
    case Errc::DuplicateAtom: return "DuplicateAtom";
    case Errc::NotAnUltraword: return "NotAnUltraword";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::TruncationOverflow: return "TruncationOverflow";
    case Errc::Unlimited: return "Unlimited";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::OverlappingTransitions: return "OverlappingTransitions";
    case Errc::NonPositiveDelta: return "NonPositiveDelta";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::OnPartitionPoint: return "OnPartitionPoint";
    case Errc::AvoidSetBlocksEndpoints: return "AvoidSetBlocksEndpoints";
    case Errc::SelectionHitsDiscontinuity: return "SelectionHitsDiscontinuity";
    case Errc::NameNotInK: return "NameNotInK";
    case Errc::CharOutOfRange: return "CharOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotInfinitesimal: return "NotInfinitesimal";
    case Errc::UnlimitedCoordinate: return "UnlimitedCoordinate";
    case Errc::NonFactorable: return "NonFactorable";
    case Errc::OutOfUnitInterval: return "OutOfUnitInterval";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ulab
