#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gruss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two vectors from different spaces (dimension or weights differ).
class MetricMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnitVector : public Error {
 public:
  explicit NotUnitVector(double observed_norm)
      : Error("expected a unit vector, got norm " + std::to_string(observed_norm)),
        norm_(observed_norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

class EmptySpace : public Error {
 public:
  using Error::Error;
};

class BadRule : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

// <x,e> sits strictly inside the bracket disk, so the reversed-condition
// chain does not apply.
class DualPreconditionViolated : public Error {
 public:
  using Error::Error;
};

// An algebraic identity failed beyond tolerance; signals a bug, not bad data.
class InternalIdentityViolated : public Error {
 public:
  using Error::Error;
};

// Bad user data: non-finite values, parse failures, malformed flags.
// Carries the 1-based row/column when raised from a data file.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
  InputError(const std::string& msg, std::size_t row, std::size_t col)
      : Error(msg + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")"),
        location_(std::make_pair(row, col)) {}
  const std::optional<std::pair<std::size_t, std::size_t>>& location() const noexcept {
    return location_;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> location_;
};

}  // namespace gruss
