#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypertrees {

// Exact arithmetic everywhere except the spectral module, which is the
// only consumer of floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b) with the usual conventions: 0 for b < 0 or b > a.
Integer binomial(long a, long b);

// n^e for e >= 0.
Integer int_pow(const Integer& base, unsigned long e);

}  // namespace hypertrees
