#pragma once

#include <stdexcept>
#include <string>

namespace homext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (sign strings, module triples, files).
struct ParseError : Error {
    using Error::Error;
};

// Orientation vector shorter than 2.
struct TooShort : Error {
    using Error::Error;
};

// Orientation vector with a single sign; the cycle quiver would not be acyclic.
struct AllSignsEqual : Error {
    using Error::Error;
};

// Quiver equivalence whose arrow relation does not respect endpoints.
struct IncompatibleEquivalence : Error {
    using Error::Error;
};

// Walk with a sub-walk of the form a a^-1 or a^-1 a, or broken composability.
struct NotReduced : Error {
    using Error::Error;
};

// Hook or cohook move requested where the defining letter does not exist.
struct UndefinedOperation : Error {
    using Error::Error;
};

// Band power fed into an operation defined on strings only.
struct NotAString : Error {
    using Error::Error;
};

struct WrongCardinality : Error {
    using Error::Error;
};

struct NotExceptional : Error {
    using Error::Error;
};

struct NotComplete : Error {
    using Error::Error;
};

struct CyclicQuiver : Error {
    using Error::Error;
};

// hom - euler came out negative; the oracle is inconsistent with itself.
struct NegativeExt : Error {
    using Error::Error;
};

// Two routes that must agree disagreed. CLI maps this to exit code 3.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct InconsistentAssignment : Error {
    using Error::Error;
};

}  // namespace homext
