#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace goodpoly {

// Exact arithmetic everywhere: coefficients and counts are arbitrary
// precision integers, geometric decisions use exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace goodpoly
