#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define KOSZUL_ERROR(Name)                                          \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

KOSZUL_ERROR(InhomogeneousRelation)
KOSZUL_ERROR(DegreeZeroPartInfinite)
KOSZUL_ERROR(SmallCharFallbackFailed)
KOSZUL_ERROR(FieldDoesNotSplit)
KOSZUL_ERROR(DegreeZeroNotSemisimple)
KOSZUL_ERROR(PreconditionVerdictNotHolds)
KOSZUL_ERROR(PreconditionFailed)
KOSZUL_ERROR(NotDirected)
KOSZUL_ERROR(NotASubgroup)
KOSZUL_ERROR(NotEI)
KOSZUL_ERROR(NotGeneratedInSingleHeight)
KOSZUL_ERROR(SearchBudgetExceeded)
KOSZUL_ERROR(SchemaError)
KOSZUL_ERROR(InvalidStructure)

#undef KOSZUL_ERROR

}  // namespace koszul
