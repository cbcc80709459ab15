#pragma once

#include <stdexcept>
#include <string>

namespace cqsym {

/// A domain object or operation argument violated a named invariant.
///
/// The invariant name is stable and machine readable; the CLI reports it
/// verbatim in its error object.
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string invariant, const std::string& message)
      : std::invalid_argument(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Malformed textual input (JSON shape, rational syntax, flags).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace cqsym
