#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

// Exact arithmetic everywhere: sequence values outgrow 64 bits near n = 40
// and series coefficients must stay rational with no rounding.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace motzkin
