#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

// Bad input: malformed graph, invalid partition, out-of-range level, shape mismatch.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical invariant did not hold: inexact division, lost symmetry,
// mismatch between two routes that must agree.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InexactDivision : public MathError {
public:
    using MathError::MathError;
};

class DivisionByZero : public MathError {
public:
    using MathError::MathError;
};

class SymmetryViolation : public MathError {
public:
    using MathError::MathError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qloop
