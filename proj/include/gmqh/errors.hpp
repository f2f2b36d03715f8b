#pragma once

#include <stdexcept>
#include <string>

namespace gmqh {

// Base for all engine failures that indicate a broken precondition or an
// inconsistent upstream computation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what)
      : Error("mismatched variable contexts: " + what) {}
};

class UnsupportedConstruction : public Error {
 public:
  using Error::Error;
};

class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace gmqh
