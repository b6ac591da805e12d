#ifndef CLIFFPAR_ERRORS_HPP_
#define CLIFFPAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cliffpar {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation on a mathematical operation (zero inverse,
/// degenerate triangle, non-star line, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Operation is meaningful only for one of the two algebra kinds.
struct UnsupportedCaseError : Error {
  using Error::Error;
};

/// A linear map fed to a decomposition is not in the expected group.
struct MembershipError : Error {
  using Error::Error;
};

/// A linear map is singular where an invertible one is required.
struct RankError : Error {
  using Error::Error;
};

/// A size guard or search budget tripped; the result is not certified.
struct ResourceError : Error {
  using Error::Error;
};

/// Malformed or uncertifiable configuration / text input.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cliffpar

#endif  // CLIFFPAR_ERRORS_HPP_
