#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skewenergy {

/// Arbitrary-precision signed integer used for every exact coefficient.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace skewenergy
