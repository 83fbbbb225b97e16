#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace legch {

// Exact integers everywhere; torsion orders and augmentation values must not
// wrap or round.
using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline bool is_even(long g) { return ((g % 2) + 2) % 2 == 0; }

}  // namespace legch
