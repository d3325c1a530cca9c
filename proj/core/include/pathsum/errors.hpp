#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathsum {

/// An input violated a precondition. `field()` names the offending parameter.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Evaluation point outside the domain of a closed-form expression.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested series does not converge (b <= 0).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration or table would exceed its configured size bound.
class CapExceededError : public std::length_error {
 public:
  CapExceededError(std::size_t cap, const std::string& what)
      : std::length_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace pathsum
