#ifndef QFV_ERRORS_HPP
#define QFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfv {

// Machine-readable failure kinds. Every library error carries exactly one of
// these, so callers (and the CLI exit-code mapping) can dispatch without
// parsing messages.
enum class ErrorCode {
  InvalidInput,         // malformed document, bad sizes, out-of-range indices
  CyclicQuiver,         // directed cycle found during validation
  MultipleSources,      // more than one vertex without incoming arrows
  UnreachableVertex,    // vertex not reachable from the source
  LengthMismatch,       // dimension vector length disagrees with vertex count
  ShapeMismatch,        // representation block sizes disagree with the quiver
  EmptyModuli,          // no stable points: some r_i exceeds s_i
  NotStrict,            // operation requires r_i < s_i at every vertex i >= 1
  NotStable,            // representation fails the full-rank stability test
  NotACharacter,        // weight does not pair to zero with the dimension vector
  NotToric,             // operation requires all dimensions equal to one
  NotPointed,           // grading cone contains a line; monomial sets infinite
  NotWeaklyExceptional, // backward Hom spaces are nonzero for the degree list
  OutOfBottRange,       // weight entry below -(s_i - r_i); pushforward refuses
  SearchBudgetExceeded, // lattice search hit its radius without stabilizing
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the Schur-power engine when a weight entry at some vertex lies
// strictly below -(s_i - r_i). Carries the offending vertex and entry.
class OutOfBottRangeError : public Error {
 public:
  OutOfBottRangeError(int vertex, int entry, std::string message)
      : Error(ErrorCode::OutOfBottRange, std::move(message)),
        vertex_(vertex),
        entry_(entry) {}

  int vertex() const { return vertex_; }
  int entry() const { return entry_; }

 private:
  int vertex_;
  int entry_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qfv

#endif  // QFV_ERRORS_HPP
