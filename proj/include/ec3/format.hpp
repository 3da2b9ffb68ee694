#ifndef EC3_FORMAT_HPP
#define EC3_FORMAT_HPP

#include <cstdio>
#include <string>

namespace ec3 {

// Shortest form with the given number of significant digits. Interface
// files carry 12; matrix dumps use 17 to round-trip exactly.
inline std::string to_sig(double value, int digits = 12) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

}  // namespace ec3

#endif
