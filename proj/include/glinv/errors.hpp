#ifndef GLINV_ERRORS_HPP
#define GLINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glinv {

/// A configured size cap (degree, matrix size, summation tuples) was exceeded.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands live over different matrix sizes or permutation degrees.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or structured input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace glinv

#endif  // GLINV_ERRORS_HPP
