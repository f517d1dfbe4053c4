#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace roth {

enum class ErrorCode {
  kParse,
  kNotAGroup,
  kUnsupportedParameter,
  kOverflowGuard,
  kNotASubgroup,
  kKindMismatch,
  kDimensionCap,
  kNotAbelian,
  kNotAbelianSubgroup,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class GroupAxiom { kClosure, kIdentity, kInverses, kAssociativity };

std::string_view to_string(GroupAxiom axiom);

/// Raised when a table fails one of the group axioms. The witness triple is
/// axiom specific: (row, column, value) for closure, (candidate, element, -)
/// for identity, (element, -, -) for inverses and (a, b, c) for associativity.
class NotAGroupError : public Error {
 public:
  NotAGroupError(GroupAxiom axiom, std::array<long, 3> witness, const std::string& message)
      : Error(ErrorCode::kNotAGroup, message), axiom_(axiom), witness_(witness) {}

  GroupAxiom axiom() const noexcept { return axiom_; }
  const std::array<long, 3>& witness() const noexcept { return witness_; }

 private:
  GroupAxiom axiom_;
  std::array<long, 3> witness_;
};

}  // namespace roth
