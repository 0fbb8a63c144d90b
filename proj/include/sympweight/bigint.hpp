#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sympweight {

// All counts, multiplicities and dimensions are exact; they exceed 64 bits
// at moderate rank/degree.
using Int = boost::multiprecision::cpp_int;

}  // namespace sympweight
