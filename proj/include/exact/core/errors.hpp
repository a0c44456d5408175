#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace exact {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of a construction does not hold. `lemma` names the
// construction so callers can report which statement was refused.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string lemma, const std::string& detail)
      : Error(lemma + ": precondition violated: " + detail), lemma_(std::move(lemma)) {}
  const std::string& lemma() const { return lemma_; }

 private:
  std::string lemma_;
};

// The model does not provide the requested operation.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// Malformed objects or morphisms handed to a model.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A construction produced no value where the theory guarantees one.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

template <class T>
T guaranteed(std::optional<T> value, const std::string& what) {
  if (!value) throw ConstructionFailure("construction failed: " + what);
  return std::move(*value);
}

}  // namespace exact
