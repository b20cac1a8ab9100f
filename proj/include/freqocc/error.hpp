#pragma once

#include <stdexcept>
#include <string>

namespace freqocc {

/// Coarse error category, used by the CLI to pick an exit code.
enum class ErrorCategory {
    config,
    io,
    parse,
    numeric,
    grid,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

/// Bad command-line usage or inconsistent run configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& m) : Error(ErrorCategory::config, m) {}
};

/// Missing or unreadable/unwritable files.
class IoError : public Error {
public:
    explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};

/// A document exists but cannot be interpreted.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error(ErrorCategory::parse, m) {}
};

/// Shape mismatch between data and consumer (rows, channels, classes).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// Non-finite values or arguments outside their admissible range.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// A structurally valid document describing an impossible model or dataset.
class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// Spectrum fed to an inverse transform is not conjugate-symmetric.
class SymmetryError : public Error {
public:
    explicit SymmetryError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// Caller broke a documented precondition (e.g. unnormalized map).
class ContractViolationError : public Error {
public:
    explicit ContractViolationError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// Mask policy parameters outside their admissible range.
class InvalidPolicyError : public Error {
public:
    explicit InvalidPolicyError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// Operation applied to an attribution map in the wrong domain.
class DomainMismatchError : public Error {
public:
    explicit DomainMismatchError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};

/// A dataset x method grid with missing cells.
class IncompleteGridError : public Error {
public:
    explicit IncompleteGridError(const std::string& m) : Error(ErrorCategory::grid, m) {}
};

}  // namespace freqocc
