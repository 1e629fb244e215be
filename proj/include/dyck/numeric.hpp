#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero when k lies outside [0, n].
Int binomial(int n, int k);

}  // namespace dyck
