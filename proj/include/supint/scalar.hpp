#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>

namespace supint {

/// Every catalog formula is evaluated over the complex field; real systems
/// embed with zero imaginary parts.
using Scalar = std::complex<double>;

using ParamMap = std::map<std::string, Scalar>;

inline bool finite(const Scalar& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Integer power by repeated multiplication; works for any multiplicative
/// carrier that can be divided into from a given "one" element.
template <class S>
S powi_from_one(const S& one, const S& x, int n) {
    if (n < 0) return one / powi_from_one(one, x, -n);
    S r = one;
    S b = x;
    int k = n;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

} // namespace supint
