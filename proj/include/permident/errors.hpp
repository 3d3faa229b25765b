#pragma once

#include <stdexcept>
#include <string>

namespace permident {

// Enumeration/engine size guards. Messages name the guard and the limit.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& msg)
        : std::runtime_error("SizeGuard: " + msg) {}
};

// Argument outside the operation's domain (odd size, k out of range, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg)
        : std::invalid_argument("DomainError: " + msg) {}
};

// Mixing cyclotomic numbers from fields of different order.
class FieldMismatchError : public std::invalid_argument {
public:
    explicit FieldMismatchError(const std::string& msg)
        : std::invalid_argument("FieldMismatch: " + msg) {}
};

class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& msg)
        : std::domain_error("DivisionByZero: " + msg) {}
};

// Two point coordinates coincide, so an off-diagonal denominator vanishes.
class DuplicatePointsError : public std::invalid_argument {
public:
    explicit DuplicatePointsError(const std::string& msg)
        : std::invalid_argument("DuplicatePoints: " + msg) {}
};

class NonPrimeError : public std::invalid_argument {
public:
    explicit NonPrimeError(const std::string& msg)
        : std::invalid_argument("NonPrime: " + msg) {}
};

// Two independent computation paths disagree: an implementation bug signal.
class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& msg)
        : std::logic_error("InternalInconsistency: " + msg) {}
};

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& msg)
        : std::invalid_argument("ParseError: " + msg) {}
};

} // namespace permident
