#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primegraph {

enum class ErrorCode {
  SizeExceeded,
  EmptySet,
  BadParams,
  BadVertex,
  NotPrime,
  Disconnected,
  NotMpg,
  Inadmissible,
  TooSmall,
  PreconditionFailed,
  NotBaseGraph,
  BadSpec,
  BadParts,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Raised by every library operation whose precondition is violated.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// MalformedInput carrying the byte offset of the first offending character.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : GraphError(ErrorCode::MalformedInput,
                   what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace primegraph
