#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grf {

enum class ErrorCode {
  // Newick grammar
  UnbalancedParens,
  EmptyLabel,
  DuplicateTaxon,
  TaxaMismatch,
  TrailingGarbage,
  MissingSemicolon,
  MalformedNumber,
  UnterminatedQuote,
  UnexpectedCharacter,
  EmptyInput,
  // model / cost / matching
  InvalidTree,
  BothGaps,
  InvalidMatching,
  InvalidArgument,
  TooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grf
