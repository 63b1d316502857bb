#pragma once

#include <stdexcept>
#include <string>

namespace vtcodes {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied parameters or inputs that violate an operation's preconditions.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Code length for which the q-ary systematic encoder has no valid layout (n = 2^m + 1).
class UnsupportedLength : public ParameterError {
  public:
    using ParameterError::ParameterError;
};

/// A word could not be decoded: the input is not a codeword or is not one edit away from one.
class CodecError : public Error {
  public:
    using Error::Error;
};

class NotACodeword : public CodecError {
  public:
    using CodecError::CodecError;
};

class NoCandidate : public CodecError {
  public:
    using CodecError::CodecError;
};

/// More than one codeword explains the received word. Single-edit uniqueness is a
/// theorem for VT codes, so this always indicates a defect.
class AmbiguousCorrection : public CodecError {
  public:
    using CodecError::CodecError;
};

} // namespace vtcodes
