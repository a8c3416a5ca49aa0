#ifndef HESSBERG_ERROR_HPP
#define HESSBERG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hessberg {

/// Malformed or out-of-contract user input. CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested computation exceeds a configured combinatorial bound. CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cross-check that must hold mathematically failed; signals a bug. CLI exit code 4.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Feature outside the implemented surface (e.g. chart ideals beyond type A).
class UnsupportedError : public InputError {
public:
  explicit UnsupportedError(const std::string& msg) : InputError(msg) {}
};

}  // namespace hessberg

#endif
