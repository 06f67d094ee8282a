#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poisson {

// Root of every error the engine raises on bad input or a violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class GradeError : public Error {
public:
    using Error::Error;
};

// Raised by the polynomial parser; position is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), message_(message), position_(position)
    {
    }

    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

class NotPoissonError : public Error {
public:
    using Error::Error;
};

class NotHomogeneousError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class NotClosedError : public Error {
public:
    using Error::Error;
};

class NotMemberError : public Error {
public:
    using Error::Error;
};

class InvalidPairError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    using Error::Error;
};

class SliceTooLargeError : public Error {
public:
    using Error::Error;
};

// An identity that holds as a theorem failed. Always an engine bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace poisson
