#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qclaw {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division was requested but no exact quotient exists.
class NotDivisibleError : public Error {
public:
    using Error::Error;
};

/// Two torus elements attached to different frames were combined.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix dimensions do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

class NotSkewSymmetricError : public Error {
public:
    NotSkewSymmetricError(const std::string& what, int row, int col)
        : Error(what), row(row), col(col) {}
    int row, col;
};

class NotCompatibleError : public Error {
public:
    NotCompatibleError(const std::string& what, int row, int col)
        : Error(what), row(row), col(col) {}
    int row, col;
};

class NotSkewSymmetrizableError : public Error {
public:
    using Error::Error;
};

/// A cluster variable failed to be a Laurent polynomial.  For quantum
/// mutation this signals an internal inconsistency, not a user error.
class NonLaurentError : public Error {
public:
    using Error::Error;
};

class NotHomogeneousError : public Error {
public:
    NotHomogeneousError(const std::string& what, std::vector<long long> degrees)
        : Error(what), degrees(std::move(degrees)) {}
    std::vector<long long> degrees;
};

class ZeroElementError : public Error {
public:
    using Error::Error;
};

class NotInAdjacentTorusError : public Error {
public:
    NotInAdjacentTorusError(const std::string& what, long long power)
        : Error(what), power(power) {}
    long long power;  // offending power of the mutation-direction generator
};

class NotInLatticeError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qclaw
