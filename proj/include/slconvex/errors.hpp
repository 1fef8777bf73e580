#pragma once

#include <stdexcept>
#include <string>

namespace slconvex {

// Base class for all slconvex errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Numeric-domain violation: determinant out of range, argument below a
// profile's lower domain bound, zero direction vector, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

// A matrix operation that requires invertibility received det == 0.
class SingularMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace slconvex
