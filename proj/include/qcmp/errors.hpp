#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qcmp {

// All library errors carry a stable short name next to the message;
// the CLI reports the name so scripts can dispatch on it.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

#define QCMP_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                               \
      public:                                                                  \
        explicit Name(const std::string& message) : Error(#Name, message) {}   \
    };

QCMP_DEFINE_ERROR(ParseError)        // malformed text input (polynomials, files)
QCMP_DEFINE_ERROR(NotAUnit)          // element not invertible in F_q[x]/(x^m-1)
QCMP_DEFINE_ERROR(NotADivisor)       // generator polynomial does not divide x^m-1
QCMP_DEFINE_ERROR(GcdNotOne)         // length not coprime to the characteristic
QCMP_DEFINE_ERROR(CapExceeded)       // cyclic enumeration dimension above cap
QCMP_DEFINE_ERROR(BudgetExceeded)    // distance enumeration above budget guard
QCMP_DEFINE_ERROR(DimensionMismatch) // incompatible lengths, fields or shapes
QCMP_DEFINE_ERROR(RankDefect)        // certificate held but the built matrix lost rank
QCMP_DEFINE_ERROR(Unsupported)       // operation outside its supported regimes
QCMP_DEFINE_ERROR(MissingWordCache)  // minimum-weight word list required but absent
QCMP_DEFINE_ERROR(EmptyCode)         // no nonzero codeword to report on

#undef QCMP_DEFINE_ERROR

}  // namespace qcmp
