#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fpt {

// Exact arbitrary-precision integer for counts and series coefficients.
// Parts and weights stay machine-width; only aggregates grow.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace fpt
