#include "qfv/errors.hpp"

namespace qfv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CyclicQuiver: return "CyclicQuiver";
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::UnreachableVertex: return "UnreachableVertex";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptyModuli: return "EmptyModuli";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotToric: return "NotToric";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotWeaklyExceptional: return "NotWeaklyExceptional";
    case ErrorCode::OutOfBottRange: return "OutOfBottRange";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace qfv
