#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Base for every error raised by the library. Mathematical failures
// (non-symmetric p, non-membership, failed cross-checks) derive from
// MathError; malformed input derives from SchemaError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MathError : public Error {
 public:
  using Error::Error;
};

// A truncated computation was asked for more than its valid order supports.
class OrderError : public MathError {
 public:
  using MathError::MathError;
};

class NonInvertibleError : public MathError {
 public:
  using MathError::MathError;
};

// Input outside the domain of an operation (e.g. X not in D_p^a).
class DomainError : public MathError {
 public:
  using MathError::MathError;
};

class UnsupportedError : public MathError {
 public:
  using MathError::MathError;
};

// Two independent routes to the same quantity disagreed.
class ConsistencyError : public MathError {
 public:
  using MathError::MathError;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace qf
