#pragma once

/// Error taxonomy shared by every nilcone module.
///
/// DomainError is raised when an input violates an operation's precondition,
/// ResourceError when a requested computation exceeds a configured cap and
/// InternalError when an asserted mathematical invariant fails (a bug).

#include <stdexcept>
#include <string>

namespace nilcone {

class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string field, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)), field_(std::move(field)) {}

  /// Short machine-readable error name, e.g. "unstable_chain".
  const std::string& name() const noexcept { return name_; }
  /// Offending input field, empty when not attributable to one.
  const std::string& field() const noexcept { return field_; }

 private:
  std::string name_;
  std::string field_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  InternalError(const std::string& message) : Error("internal", "", message) {}
};

inline void require(bool cond, const std::string& name, const std::string& field, const std::string& message) {
  if (!cond) throw DomainError(name, field, message);
}

inline void ensure(bool cond, const std::string& message) {
  if (!cond) throw InternalError(message);
}

}  // namespace nilcone
