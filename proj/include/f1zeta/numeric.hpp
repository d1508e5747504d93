#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace f1zeta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// 50 significant decimal digits; the limit module needs at least 30.
using HighReal = boost::multiprecision::cpp_bin_float_50;

}  // namespace f1zeta
