#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dixit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failures carry the byte offset of the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EmptyInput : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class InvalidCharacter : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class NonCanonicalLeadingRing : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class UnknownLetter : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class DivisionByNothing : public Error {
public:
    using Error::Error;
};

class NotDeficient : public Error {
public:
    using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
public:
    using Error::Error;
};

class NotDenestable : public Error {
public:
    using Error::Error;
};

class AmbiguousTermCount : public Error {
public:
    using Error::Error;
};

} // namespace dixit
