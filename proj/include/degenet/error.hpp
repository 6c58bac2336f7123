#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degenet {

/// Machine-readable failure category carried by every Error.
enum class ErrorCode {
  syntax,              // malformed document text
  schema,              // missing field / wrong type
  invariant,           // well-typed but violates a domain invariant
  unknown_id,          // reference to a node, edge, element or function that does not exist
  domain,              // argument outside its admissible range
  dimension_mismatch,  // vectors or distributions of different length
  support,             // KL support violation
  undefined,           // quantity undefined for this input (e.g. n < 2)
  limit_exceeded,      // enumeration cap reached
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view reason() const noexcept { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace degenet
