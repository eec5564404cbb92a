#pragma once

#include <stdexcept>
#include <string>

namespace mvcount {

/// Input outside an operation's domain (bad discriminant, zero argument, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define MVCOUNT_REQUIRE(cond, msg)                   \
  do {                                               \
    if (!(cond)) throw ::mvcount::DomainError(msg);  \
  } while (0)

#define MVCOUNT_CHECK(cond, msg)                      \
  do {                                                \
    if (!(cond)) throw ::mvcount::InternalError(msg); \
  } while (0)

}  // namespace mvcount
