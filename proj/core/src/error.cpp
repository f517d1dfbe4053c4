#include "roth/error.hpp"

namespace roth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotAGroup: return "NotAGroup";
    case ErrorCode::kUnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::kOverflowGuard: return "OverflowGuard";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kDimensionCap: return "DimensionCap";
    case ErrorCode::kNotAbelian: return "NotAbelian";
    case ErrorCode::kNotAbelianSubgroup: return "NotAbelianSubgroup";
  }
  return "Unknown";
}

std::string_view to_string(GroupAxiom axiom) {
  switch (axiom) {
    case GroupAxiom::kClosure: return "closure";
    case GroupAxiom::kIdentity: return "identity";
    case GroupAxiom::kInverses: return "inverses";
    case GroupAxiom::kAssociativity: return "associativity";
  }
  return "unknown";
}

}  // namespace roth
