#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parsicompact {

enum class ErrorCode {
  kEmptyInput,
  kMalformedInput,
  kLengthMismatch,
  kDuplicateSpecies,
  kAmbiguousSymbol,
  kTooManyStates,
  kBadColumnRange,
  kBadSubsetSize,
  kUnknownSpecies,
  kDuplicateLabel,
  kAlreadyLabelled,
  kNotLabelled,
  kNotAdjacent,
  kSplitUnderflow,
  kLabelCollision,
  kNotInternal,
  kNewickParse,
  kNotBinary,
  kEmptyTree,
  kArityMismatch,
  kOracleTooLarge,
  kIllegalContraction,
  kTooFewSpecies,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// tests and the CLI can tell error kinds apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parsicompact
