// Exception types thrown by the kiselman library.
//
// The CLI maps these onto exit codes: ValidationError -> 2,
// ResourceError -> 3, InvariantError -> 4.  DomainError is a precondition
// failure on an otherwise well-formed value and is also reported as 2.

#ifndef KISELMAN_EXCEPTION_HPP_
#define KISELMAN_EXCEPTION_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace kiselman {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: letters out of range, rank mismatch, parse failure.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // A well-formed value outside the domain of a partial map (e.g. pi on an
  // element not containing the letter 1).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A configured safety cap (node budget, element limit, rank policy) was hit.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A computed value contradicts a proven identity.  Never expected.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

}  // namespace kiselman

#endif  // KISELMAN_EXCEPTION_HPP_
