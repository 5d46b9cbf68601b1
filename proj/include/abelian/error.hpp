#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undefined word operation: bad cancellation, length mismatch, letter outside the alphabet.
class WordError : public Error {
public:
    using Error::Error;
};

// The exponents or rules do not describe a Parry substitution.
class InvalidSubstitution : public Error {
public:
    using Error::Error;
};

// A digit sequence is not a usable F-representation.
class InvalidRepresentation : public Error {
public:
    using Error::Error;
};

// A word would exceed the configured materialization cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// The Z-set recursion cannot take a step: some block image lacks the required 0^d prefix.
class InapplicableStep : public Error {
public:
    using Error::Error;
};

// Co-decomposition and brute force disagree.
class VerificationMismatch : public Error {
public:
    using Error::Error;
};

} // namespace abelian
