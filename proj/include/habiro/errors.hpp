#pragma once

#include <stdexcept>
#include <string>

namespace habiro {

// Errors split in two families: malformed input (the caller handed us
// something that does not parse or does not fit together) and domain errors
// (well-formed input on which the mathematics is undefined).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HABIRO_DEFINE_ERROR(Name, Base)                                 \
  class Name : public Base {                                            \
   public:                                                              \
    explicit Name(const std::string& what) : Base(#Name ": " + what) {} \
  };

HABIRO_DEFINE_ERROR(NonExactDivision, DomainError)
HABIRO_DEFINE_ERROR(NonInvertibleVariable, DomainError)
HABIRO_DEFINE_ERROR(NotInQ, DomainError)
HABIRO_DEFINE_ERROR(DepthExceeded, DomainError)
HABIRO_DEFINE_ERROR(NotAdmissible, DomainError)
HABIRO_DEFINE_ERROR(ZeroDenominator, DomainError)
HABIRO_DEFINE_ERROR(NotInQSubring, DomainError)
HABIRO_DEFINE_ERROR(NotAKnot, DomainError)
HABIRO_DEFINE_ERROR(NotCoprime, DomainError)
HABIRO_DEFINE_ERROR(NotAUnit, DomainError)
HABIRO_DEFINE_ERROR(CoefficientOverflow, DomainError)

HABIRO_DEFINE_ERROR(ShapeMismatch, InputError)
HABIRO_DEFINE_ERROR(InterfaceMismatch, InputError)
HABIRO_DEFINE_ERROR(OpenDiagram, InputError)
HABIRO_DEFINE_ERROR(ColorCountMismatch, InputError)
HABIRO_DEFINE_ERROR(UnknownName, InputError)
HABIRO_DEFINE_ERROR(FormatError, InputError)

#undef HABIRO_DEFINE_ERROR

class SyntaxError : public InputError {
 public:
  SyntaxError(int line, int col, const std::string& msg)
      : InputError("SyntaxError at line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace habiro
