#pragma once

#include <stdexcept>
#include <string>

namespace cohomc {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, bad matrices, unparsable space descriptions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : InvalidArgument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                        std::to_string(actual)) {}
};

/// A space, decomposition, catalog entry or degree could not be resolved.
class NotRegistered : public Error {
 public:
  using Error::Error;
};

/// Two derivations of the same group disagree.
class ConflictingEntry : public Error {
 public:
  using Error::Error;
};

/// An exact-sequence fragment matched a pattern but its data is contradictory.
class InconsistentFragment : public Error {
 public:
  using Error::Error;
};

/// Exactness does not force the value of an unknown group.
class Underdetermined : public Error {
 public:
  Underdetermined(int degree, const std::string& what)
      : Error("underdetermined at degree " + std::to_string(degree) + ": " + what), degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// The requested result is outside what the representation can express.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace cohomc
