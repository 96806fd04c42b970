#pragma once

#include <stdexcept>
#include <string>

namespace qons {

/// Base of every error raised by the library. `kind()` is a stable tag used
/// in certificates and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QONS_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

QONS_DEFINE_ERROR(DivisionByZero);
QONS_DEFINE_ERROR(DenominatorOutOfDomain);
QONS_DEFINE_ERROR(NotDivisible);
QONS_DEFINE_ERROR(UnboundVariable);
QONS_DEFINE_ERROR(PoleAtPoint);
QONS_DEFINE_ERROR(ParseError);
QONS_DEFINE_ERROR(AlphabetMismatch);
QONS_DEFINE_ERROR(ZeroDeformation);
QONS_DEFINE_ERROR(UnassignedLetter);
QONS_DEFINE_ERROR(NegativeSpinParameter);
QONS_DEFINE_ERROR(NonInvertibleSpectralParameter);
QONS_DEFINE_ERROR(PresentationMismatch);
QONS_DEFINE_ERROR(InvalidModule);
QONS_DEFINE_ERROR(InvalidRule);
QONS_DEFINE_ERROR(CarrierMismatch);
QONS_DEFINE_ERROR(MissingIndex);
QONS_DEFINE_ERROR(ResourceBudgetExceeded);
QONS_DEFINE_ERROR(ConfigError);

#undef QONS_DEFINE_ERROR

}  // namespace qons
