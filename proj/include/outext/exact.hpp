#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace outext {

// All arithmetic in the engine is exact. Multiplicities and dimensions are
// integers; class-function values are rationals (Moebius-weighted power sums
// have rational intermediate values even though characters are integral).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace outext
