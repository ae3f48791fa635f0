#pragma once

#include <string>
#include <vector>

#include "sumgraph/bigint.hpp"

namespace sumgraph {

// f_0 = 0, f_1 = 1, f_{k} = f_{k-1} + f_{k-2}; negative indices by the sign
// rule f_{-t} = (-1)^{t-1} f_t.
BigInt fib(long k);

// gcd(f_n, f_{n+1} - 1) in closed form:
//   2                      if n = 3 (mod 6)
//   1                      if n = 1, 5 (mod 6)
//   f_{n/2}                if n = 0 (mod 4)
//   f_{n/2} + 2 f_{n/2-1}  if n = 2 (mod 4)
BigInt gcd_fn_closed_form(long n);

/**
 * The parameter tuple behind Fibonacci cycle labellings: d = (f_n, f_{n+1}-1)
 * with Bezout pair (x, y), z = (1-f_{n-1})x - f_n y, q = f_n/d,
 * q1 = (f_{n+1}-1)/d, e = zq + f_{n-1} - 1, z1 = z q1 + f_n,
 * delta = gcd(e, z1). A Fibonacci labelling of C_n over an abelian group
 * requires ord(a0) | delta and d*a1 = z*a0.
 */
struct FibParams {
    long n = 0;
    BigInt d, x, y, z, q, q1, e, z1, delta;
};

FibParams fib_params(long n);  // pre: n >= 3

struct DeltaRatioRow {
    long n = 0;
    BigInt delta;
    bool has_ratio = false;
    double ratio = 0.0;  // delta(n_k) / delta(n_{k-1}), display only
};

struct DeltaRatioProgression {
    int step = 0;      // 4 or 6
    int residue = 0;   // r in n = step*k + r
    std::vector<DeltaRatioRow> rows;
};

/**
 * Numerical exploration of the delta-ratio conjecture: consecutive ratios on
 * the progressions n = 4k+r (r in {0,2}) and n = 6k+r (r in {1,3,5}),
 * alongside the conjectured limits 2+phi and 13+8/phi. Report only; nothing
 * here is a pass/fail check.
 */
struct DeltaRatioReport {
    std::vector<DeltaRatioProgression> progressions;
    double limit_4k = 0.0;  // 2 + phi
    double limit_6k = 0.0;  // 13 + 8/phi
    std::string phi_50_digits;
};

DeltaRatioReport delta_ratio_report(long max_k);  // pre: max_k >= 2

// (1+sqrt(5))/2 to `digits` decimal digits, for display
std::string phi_decimal(int digits);

}  // namespace sumgraph
