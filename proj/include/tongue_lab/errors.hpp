#pragma once

#include <stdexcept>
#include <string>

namespace tongue_lab {

// Usage errors are caused by the caller's inputs; numerical errors mean a
// computation could not produce a trustworthy answer. The CLI maps them to
// exit codes 2 and 3.
enum class ErrorCategory { Usage, Numerical };

class Error : public std::runtime_error {
public:
  Error(std::string name, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

private:
  std::string name_;
  ErrorCategory category_;
};

#define TONGUE_LAB_DEFINE_ERROR(Type, Category)                                  \
  class Type : public Error {                                                    \
  public:                                                                        \
    explicit Type(const std::string& what)                                      \
        : Error(#Type, ErrorCategory::Category, what) {}                         \
  };

TONGUE_LAB_DEFINE_ERROR(ConfigError, Usage)
TONGUE_LAB_DEFINE_ERROR(ParameterOutOfRange, Usage)
TONGUE_LAB_DEFINE_ERROR(NonCoprime, Usage)
TONGUE_LAB_DEFINE_ERROR(OrderMismatch, Usage)
TONGUE_LAB_DEFINE_ERROR(InsufficientOrder, Usage)
TONGUE_LAB_DEFINE_ERROR(NonvanishingConstantTerm, Usage)

TONGUE_LAB_DEFINE_ERROR(BracketFailure, Numerical)
TONGUE_LAB_DEFINE_ERROR(DegenerateWitness, Numerical)
TONGUE_LAB_DEFINE_ERROR(StepUnderflow, Numerical)
TONGUE_LAB_DEFINE_ERROR(InsufficientData, Numerical)
TONGUE_LAB_DEFINE_ERROR(UnderflowedWidths, Numerical)
TONGUE_LAB_DEFINE_ERROR(NotRootOfUnity, Numerical)
TONGUE_LAB_DEFINE_ERROR(IdentityToTruncation, Numerical)
TONGUE_LAB_DEFINE_ERROR(NonresonantLeadingTerm, Numerical)
TONGUE_LAB_DEFINE_ERROR(MultiplicityNotOne, Numerical)

#undef TONGUE_LAB_DEFINE_ERROR

} // namespace tongue_lab
