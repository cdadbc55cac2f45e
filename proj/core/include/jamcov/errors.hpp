#pragma once

#include <stdexcept>
#include <string>

namespace jamcov {

// Error buckets mirror the CLI exit codes: config 2, numeric 3, io 4.
enum class ErrorCategory { config = 2, numeric = 3, io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

// Scenario files: malformed text, bad values, unexpected keys.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorCategory::config, what) {}
};

class ParseError : public ConfigError {
public:
    explicit ParseError(const std::string& what) : ConfigError(what) {}
};

class ValidationError : public ConfigError {
public:
    explicit ValidationError(const std::string& what) : ConfigError(what) {}
};

class UnknownKeyError : public ConfigError {
public:
    explicit UnknownKeyError(const std::string& what) : ConfigError(what) {}
};

// Numerical guards tripped inside the computation pipeline.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(ErrorCategory::numeric, what) {}
};

class InvalidParameterError : public NumericError {
public:
    explicit InvalidParameterError(const std::string& what) : NumericError(what) {}
};

// Geometry where a channel statistic degenerates (zero-distance links).
class DegenerateGeometryError : public NumericError {
public:
    explicit DegenerateGeometryError(const std::string& what) : NumericError(what) {}
};

class DivisionGuardError : public NumericError {
public:
    explicit DivisionGuardError(const std::string& what) : NumericError(what) {}
};

class InsufficientSamplesError : public NumericError {
public:
    explicit InsufficientSamplesError(const std::string& what) : NumericError(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

}  // namespace jamcov
