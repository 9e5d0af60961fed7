#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqvar {

// Base class for every error raised by the library. Subclasses map onto the
// failure kinds the CLI distinguishes (config errors vs stage failures).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    ValidationError(std::size_t row, std::string column, const std::string& what);

    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    NumericalError(std::size_t step, const std::string& what);

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class StateError : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class DependencyError : public Error {
public:
    using Error::Error;
};

class NotAssessableError : public Error {
public:
    using Error::Error;
};

class UndefinedIndexError : public Error {
public:
    using Error::Error;
};

class RefusalError : public Error {
public:
    using Error::Error;
};

}  // namespace reqvar
