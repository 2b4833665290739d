#include "parsicompact/error.hpp"

namespace parsicompact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDuplicateSpecies: return "DuplicateSpecies";
    case ErrorCode::kAmbiguousSymbol: return "AmbiguousSymbol";
    case ErrorCode::kTooManyStates: return "TooManyStates";
    case ErrorCode::kBadColumnRange: return "BadColumnRange";
    case ErrorCode::kBadSubsetSize: return "BadSubsetSize";
    case ErrorCode::kUnknownSpecies: return "UnknownSpecies";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kAlreadyLabelled: return "AlreadyLabelled";
    case ErrorCode::kNotLabelled: return "NotLabelled";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kSplitUnderflow: return "SplitUnderflow";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kNotInternal: return "NotInternal";
    case ErrorCode::kNewickParse: return "NewickParseError";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kOracleTooLarge: return "OracleTooLarge";
    case ErrorCode::kIllegalContraction: return "IllegalContraction";
    case ErrorCode::kTooFewSpecies: return "TooFewSpecies";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace parsicompact
