#ifndef OREFORCE_ERRORS_HPP
#define OREFORCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oreforce {

// Malformed input text (edge lists, flag values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but outside an operation's domain: not an OTG,
// oracle size cap exceeded, bad family parameters, too few vertices.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural fact that the theory guarantees did not hold. Always a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oreforce

#endif  // OREFORCE_ERRORS_HPP
