#pragma once

#include <stdexcept>
#include <string>

namespace dillema {

// Common base so the CLI can catch every domain error in one place.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class WriteError : public Error {
public:
    explicit WriteError(const std::string& what) : Error(what) {}
};

} // namespace dillema
