#pragma once

#include <stdexcept>
#include <string>

namespace ks7 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define KS7_DEFINE_ERROR(Name)                  \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

KS7_DEFINE_ERROR(NonUnimodular);
KS7_DEFINE_ERROR(NotAnOddPrime);
KS7_DEFINE_ERROR(BadInput);
KS7_DEFINE_ERROR(NotCoprime);
KS7_DEFINE_ERROR(ParityViolation);
KS7_DEFINE_ERROR(PreconditionViolation);
// Raised when an expression proven to be integral evaluates to a fraction;
// indicates a bug, never bad input.
KS7_DEFINE_ERROR(IntegralityFailure);

#undef KS7_DEFINE_ERROR

} // namespace ks7
