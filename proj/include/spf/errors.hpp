#pragma once

#include <stdexcept>
#include <string>

namespace spf {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used by the CLI to map failures onto exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define SPF_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                              \
  public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}         \
  };

SPF_DEFINE_ERROR(DivisionByZero)
SPF_DEFINE_ERROR(ZeroPolynomial)
SPF_DEFINE_ERROR(LogarithmicPart)
SPF_DEFINE_ERROR(PoleError)
SPF_DEFINE_ERROR(DivisionByZeroOperator)
SPF_DEFINE_ERROR(NonConstantCoefficient)
SPF_DEFINE_ERROR(InexactDivision)
SPF_DEFINE_ERROR(NonSquare)
SPF_DEFINE_ERROR(PreconditionViolated)
SPF_DEFINE_ERROR(OrderTooSmall)
SPF_DEFINE_ERROR(NotXFree)
SPF_DEFINE_ERROR(BadOrder)
SPF_DEFINE_ERROR(NoCentralizerFound)
SPF_DEFINE_ERROR(NotOnCurve)
SPF_DEFINE_ERROR(ZeroDenominator)
SPF_DEFINE_ERROR(ParseError)
SPF_DEFINE_ERROR(UnboundConstant)

#undef SPF_DEFINE_ERROR

}  // namespace spf
