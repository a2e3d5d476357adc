#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghwlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied an argument outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A closed-form evaluator was asked about parameters outside its theorem's
// hypotheses. Evaluators refuse rather than extrapolate.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap. `required` is the number
// of objects the full enumeration would need.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what + " (needs " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

// Broken internal invariant: a bug, never an expected outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ghwlab
