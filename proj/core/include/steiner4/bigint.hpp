#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace steiner4 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace steiner4
