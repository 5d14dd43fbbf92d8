#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grlie {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A tensor polynomial is not a Lie polynomial: Lyndon elimination either met
/// a non-Lyndon leading word or stopped with a nonzero residual.
struct NotLieElementError : Error {
    using Error::Error;
};

/// A relation mixes weighted degrees or does not fit the declared alphabet.
struct InhomogeneousRelationError : Error {
    using Error::Error;
};

/// Vector length does not match the ambient rank / matrix shape.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Elements over different (or incompatible) alphabets were combined.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

/// The Witt recursion produced a non-integral rank; indicates a bug.
struct NonIntegralRankError : Error {
    using Error::Error;
};

/// Invalid family parameter or operation precondition.
struct ParamError : Error {
    using Error::Error;
};

/// Lie-expression syntax error, annotated with the byte offset of the fault.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct UnknownGeneratorError : ParseError {
    using ParseError::ParseError;
};

/// Subexpressions of different weighted degrees were added or subtracted.
struct InhomogeneousExpressionError : Error {
    using Error::Error;
};

}  // namespace grlie
