#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sumgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Iterative extended Euclid: returns (g, x, y) with x*a + y*b = g, g >= 0 for
// nonnegative inputs. The coefficient sequence is the canonical remainder
// chain with back-substitution.
struct ExtGcd {
    BigInt g, x, y;
};

inline ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

}  // namespace sumgraph
