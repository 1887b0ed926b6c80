#pragma once

#include <stdexcept>
#include <string>

namespace besent {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// ConfigError -> 1, ValidationError/FormatError/TrainingError -> 2, IoError -> 3.

// Bad or missing configuration (unset API key, unreadable stopword file, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data violates a documented invariant (duplicate id, reply without parent, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A file parsed but its content does not match the declared format.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem or transport failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training diverged or hit an unrecoverable numeric state.
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace besent
