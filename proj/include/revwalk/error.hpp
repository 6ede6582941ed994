#pragma once

#include <stdexcept>
#include <string>

namespace revwalk {

/// Precondition violated by the caller (bad parameter, site outside the model).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or law could not be evaluated within the requested tolerance.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled path ended before the requested quantity was determined.
class InsufficientPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic was asked to treat right-censored values as exact.
class CensoredInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace revwalk
