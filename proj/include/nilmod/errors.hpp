#pragma once

#include <stdexcept>
#include <string>

namespace nilmod {

enum class ErrorKind {
  invalid_parameter,
  invalid_argument,
  capacity,
  invalid_action,
  unsupported_predicate,
  invalid_input,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::capacity: return "capacity-error";
    case ErrorKind::invalid_action: return "invalid-action";
    case ErrorKind::unsupported_predicate: return "unsupported-predicate";
    case ErrorKind::invalid_input: return "invalid-input";
  }
  return "error";
}

/// Base of every error raised by the library. `stage()` is filled in by
/// aggregating operations (classify, corpus) so callers can tell which step
/// gave up.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorKind kind_;
  std::string stage_;
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what)
      : Error(ErrorKind::invalid_parameter, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& cap_name, std::size_t cap, const std::string& what)
      : Error(ErrorKind::capacity,
              what + " (cap " + cap_name + "=" + std::to_string(cap) + ")"),
        cap_name_(cap_name), cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

/// A table that fails the ring or module axioms. `witness()` names the
/// offending elements, e.g. "(r,s,m)=(e2,a,x)".
class InvalidAction : public Error {
 public:
  InvalidAction(const std::string& what, std::string witness)
      : Error(ErrorKind::invalid_action, what + ": witness " + witness),
        witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class UnsupportedPredicate : public Error {
 public:
  explicit UnsupportedPredicate(const std::string& what)
      : Error(ErrorKind::unsupported_predicate, what) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::invalid_input, what) {}
};

}  // namespace nilmod
