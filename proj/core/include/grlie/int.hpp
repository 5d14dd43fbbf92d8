#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace grlie {

/// Coefficients throughout the library are arbitrary-precision integers:
/// structure constants and normal-form pivots outgrow machine words well
/// within desk-scale degree bounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Floor division with strictly positive divisor: a - fdiv(a,b)*b lies in [0, b).
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b < 0) --q;
    return q;
}

struct ExtGcd {
    Int g;  // gcd(a, b), nonnegative
    Int x;  // x*a + y*b == g
    Int y;
};

/// Extended Euclid; g is nonnegative and zero only when a == b == 0.
inline ExtGcd ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = std::move(b);
        b = std::move(t);
        t = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(t);
        t = y0 - q * y1;
        y0 = std::move(y1);
        y1 = std::move(t);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {std::move(a), std::move(x0), std::move(y0)};
}

}  // namespace grlie
