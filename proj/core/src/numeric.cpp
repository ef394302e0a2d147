#include "hypertrees/numeric.hpp"

namespace hypertrees {

Integer binomial(long a, long b) {
  if (b < 0 || b > a || a < 0) return 0;
  if (b > a - b) b = a - b;
  Integer r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r = 1, b = base;
  while (e) {
    if (e & 1UL) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace hypertrees
