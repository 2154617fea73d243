#pragma once

#include <stdexcept>
#include <string>

namespace actprompt {

// Bad dimensions, bad config keys, out-of-range requests.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (annotations, spans, file contents).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Missing files, unreadable payloads, bad magic/truncation.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values where finite math is required (NaN loss and friends).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace actprompt
