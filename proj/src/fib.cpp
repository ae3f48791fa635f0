#include "sumgraph/fib.hpp"

#include "sumgraph/error.hpp"

namespace sumgraph {

BigInt fib(long k) {
    if (k < 0) {
        long t = -k;
        BigInt f = fib(t);
        return (t % 2 == 0) ? -f : f;  // f_{-t} = (-1)^{t-1} f_t
    }
    BigInt a = 0, b = 1;
    for (long i = 0; i < k; ++i) {
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

BigInt gcd_fn_closed_form(long n) {
    if (n < 3) throw Error("InvalidParameter", "closed form needs n >= 3");
    long r6 = n % 6;
    if (r6 == 3) return 2;
    if (r6 == 1 || r6 == 5) return 1;
    if (n % 4 == 0) return fib(n / 2);
    return fib(n / 2) + 2 * fib(n / 2 - 1);
}

FibParams fib_params(long n) {
    if (n < 3) throw Error("InvalidParameter", "fib_params needs n >= 3");
    FibParams p;
    p.n = n;
    BigInt fn = fib(n), fn1 = fib(n + 1), fnm1 = fib(n - 1);
    auto [d, x, y] = ext_gcd(fn, fn1 - 1);
    p.d = d;
    p.x = x;
    p.y = y;
    p.z = (1 - fnm1) * x - fn * y;
    p.q = fn / d;
    p.q1 = (fn1 - 1) / d;
    p.e = p.z * p.q + fnm1 - 1;
    p.z1 = p.z * p.q1 + fn;
    p.delta = big_gcd(p.e, p.z1);
    return p;
}

std::string phi_decimal(int digits) {
    // floor(sqrt(5 * 10^(2*digits))) gives sqrt5 scaled; phi = (1+sqrt5)/2
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt target = 5 * scale * scale;
    BigInt lo = 0, hi = 3 * scale;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (mid * mid <= target) lo = mid;
        else hi = mid - 1;
    }
    BigInt phi_scaled = (scale + lo) / 2;
    std::string s = phi_scaled.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, std::string(digits + 1 - s.size(), '0'));
    s.insert(s.size() - digits, ".");
    return s;
}

namespace {

double ratio_of(const BigInt& num, const BigInt& den) {
    // 12 decimal digits of the quotient is plenty for a display table
    BigInt scaled = (num * 1000000000000LL) / den;
    return static_cast<double>(scaled) / 1e12;
}

}  // namespace

DeltaRatioReport delta_ratio_report(long max_k) {
    if (max_k < 2) throw Error("InvalidParameter", "delta report needs max_k >= 2");
    DeltaRatioReport rep;
    const double phi = (1.0 + 2.2360679774997896964) / 2.0;
    rep.limit_4k = 2.0 + phi;
    rep.limit_6k = 13.0 + 8.0 / phi;
    rep.phi_50_digits = phi_decimal(50);
    auto run = [&](int step, int residue) {
        DeltaRatioProgression prog{step, residue, {}};
        BigInt prev = 0;
        for (long k = 1; k <= max_k; ++k) {
            long n = step * k + residue;
            if (n < 3) continue;
            FibParams p = fib_params(n);
            DeltaRatioRow row{n, p.delta, false, 0.0};
            if (prev != 0) {
                row.has_ratio = true;
                row.ratio = ratio_of(p.delta, prev);
            }
            prev = p.delta;
            prog.rows.push_back(row);
        }
        rep.progressions.push_back(std::move(prog));
    };
    run(4, 0);
    run(4, 2);
    run(6, 1);
    run(6, 3);
    run(6, 5);
    return rep;
}

}  // namespace sumgraph
