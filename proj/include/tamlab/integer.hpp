#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamlab {

/// Exact integers. Marks of norms grow like k^[G:H] and overflow 64 bits quickly.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

inline Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if (exp & 1U)
      result *= b;
    exp >>= 1U;
    if (exp != 0)
      b *= b;
  }
  return result;
}

} // namespace tamlab
