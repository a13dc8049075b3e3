#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plaplace {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// series_engine
class PrecisionMismatch : public Error {
public:
    using Error::Error;
};
class NonPositiveLeadingCoefficient : public Error {
public:
    using Error::Error;
};
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};
class InsufficientTaylorLength : public Error {
public:
    using Error::Error;
};

// problem_model
class InvalidProblem : public Error {
public:
    using Error::Error;
};
class DegenerateProblem : public Error {
public:
    using Error::Error;
};
class SignViolation : public Error {
public:
    using Error::Error;
};

// nonlinearity
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};
class DecimalLiteralRejected : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};
class NonAnalyticPoint : public Error {
public:
    using Error::Error;
};
class NegativeBaseFractionalPower : public Error {
public:
    using Error::Error;
};

// solver / verification
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};
class StepFailure : public Error {
public:
    using Error::Error;
};

}  // namespace plaplace
