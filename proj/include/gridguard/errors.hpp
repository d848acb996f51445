#pragma once

#include <stdexcept>
#include <string>

namespace gridguard {

// Exit codes of the CLI. Every library error carries the class it maps to.
enum class ErrorClass {
  Parse = 2,     // input parsing / validation
  Budget = 3,    // cell or search budget exceeded
  Coverage = 4,  // coverage verification failed
  Internal = 5,  // invariant violation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

#define GRIDGUARD_ERROR(NAME, CLASS)                                   \
  struct NAME : Error {                                                \
    explicit NAME(const std::string& msg) : Error(ErrorClass::CLASS, std::string(#NAME ": ") + msg) {} \
  }

GRIDGUARD_ERROR(ParseError, Parse);
GRIDGUARD_ERROR(NotSimple, Parse);
GRIDGUARD_ERROR(TooFewVertices, Parse);
GRIDGUARD_ERROR(DegenerateInput, Parse);
GRIDGUARD_ERROR(IoError, Parse);
GRIDGUARD_ERROR(CellBudgetExceeded, Budget);
GRIDGUARD_ERROR(BudgetExceeded, Budget);
GRIDGUARD_ERROR(InputOutsidePolygon, Internal);
GRIDGUARD_ERROR(SegmentOutsidePolygon, Internal);
GRIDGUARD_ERROR(EdgeNotOnSource, Internal);
GRIDGUARD_ERROR(TsrSourceMismatch, Internal);
GRIDGUARD_ERROR(PreconditionViolated, Internal);
GRIDGUARD_ERROR(InfeasibleInstance, Internal);

#undef GRIDGUARD_ERROR

}  // namespace gridguard
