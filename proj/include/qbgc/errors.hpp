#pragma once

#include <stdexcept>
#include <string>

namespace qbgc {

// Unsupported series/rank or a configuration bound exceeded at setup time.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration cap (group size, power-set length, ...) was hit.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a precondition.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A property the underlying theory guarantees failed to hold; always a bug,
// never a consequence of valid input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ArgumentError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace qbgc
