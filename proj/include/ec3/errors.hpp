#ifndef EC3_ERRORS_HPP
#define EC3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ec3 {

// Bad inputs: shape mismatches, constraint violations, malformed files.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: zero row/column sums, vanishing denominators.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and format failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ec3

#endif
