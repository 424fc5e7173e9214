// error.hpp -- exception types thrown by the qgp library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgp {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A grid violates the shape or range requirements of the type it was
/// supposed to become (non-square, symbol out of range, repeated symbol).
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// An argument is outside the domain of an operation (order 0, a
/// non-permutation, a transversal that does not belong to the square...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// A contraction or construction has no valid result for the given input.
class InfeasibleError : public Error
{
public:
    using Error::Error;
};

/// Malformed LSQ text. `line()` is 1-based; 0 means end of input.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), m_line(line)
    {
    }

    std::size_t line() const noexcept { return m_line; }

private:
    std::size_t m_line;
};

} // namespace qgp
