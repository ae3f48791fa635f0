#include <doctest.h>

#include <random>

#include "sumgraph/error.hpp"
#include "sumgraph/fib.hpp"

using namespace sumgraph;

TEST_CASE("fibonacci values and the negative-index rule") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-1) == 1);
    CHECK(fib(-4) == -3);
    CHECK(fib(-5) == 5);
    for (long t = 1; t <= 30; ++t) {
        BigInt expect = (t % 2 == 0 ? -fib(t) : fib(t));
        CHECK(fib(-t) == expect);
    }
}

TEST_CASE("vorobiev identity on random index pairs") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> idx(-50, 50);
    for (int t = 0; t < 100; ++t) {
        long m = idx(rng), n = idx(rng);
        CHECK(fib(m + n) == fib(m - 1) * fib(n) + fib(m) * fib(n + 1));
    }
}

TEST_CASE("gcd closed form") {
    CHECK(gcd_fn_closed_form(9) == 2);
    CHECK(big_gcd(fib(9), fib(10) - 1) == 2);
    CHECK(gcd_fn_closed_form(8) == 3);   // f_4
    CHECK(big_gcd(BigInt(21), BigInt(33)) == 3);
    CHECK(gcd_fn_closed_form(10) == 11);  // f_5 + 2 f_4
    CHECK(big_gcd(BigInt(55), BigInt(88)) == 11);
    for (long n = 3; n <= 300; ++n)
        CHECK(gcd_fn_closed_form(n) == big_gcd(fib(n), fib(n + 1) - 1));
}

TEST_CASE("consecutive fibonacci numbers are coprime") {
    for (long n = 0; n <= 300; ++n) CHECK(big_gcd(fib(n), fib(n + 1)) == 1);
}

TEST_CASE("parameter tuple for the documented cases") {
    FibParams p = fib_params(15);
    CHECK(p.d == 2);
    CHECK(p.x == 118);
    CHECK(p.y == -73);
    CHECK(p.z == 162);
    CHECK(p.delta == 682);

    FibParams q = fib_params(6);
    CHECK(q.d == 4);
    CHECK(q.z == -4);
    CHECK(q.delta == 4);

    CHECK_THROWS_AS(fib_params(2), Error);
}

TEST_CASE("parameter tuple invariants hold exactly up to n = 200") {
    for (long n = 3; n <= 200; ++n) {
        FibParams p = fib_params(n);
        CHECK(p.x * fib(n) + p.y * (fib(n + 1) - 1) == p.d);
        CHECK(p.z % p.d == 0);
        CHECK(p.d * p.q == fib(n));
        CHECK(p.d * p.q1 == fib(n + 1) - 1);
        CHECK(p.delta % p.d == 0);
    }
}

TEST_CASE("phi to fifty digits") {
    std::string phi = phi_decimal(50);
    CHECK(phi.substr(0, 12) == "1.6180339887");
    CHECK(phi.size() == 52);  // "1." + 50 digits
    // classic check: phi^2 = phi + 1 to the printed precision
    CHECK(phi_decimal(10) == "1.6180339887");
}

TEST_CASE("delta ratio report shape") {
    DeltaRatioReport rep = delta_ratio_report(8);
    CHECK(rep.progressions.size() == 5);
    CHECK(rep.limit_4k == doctest::Approx(3.6180339887));
    CHECK(rep.limit_6k == doctest::Approx(17.9442719100));
    // frozen small values, computed by hand from the parameter tuple
    const auto& p4k = rep.progressions[0];
    CHECK(p4k.step == 4);
    CHECK(p4k.residue == 0);
    REQUIRE(p4k.rows.size() >= 3);
    CHECK(p4k.rows[0].n == 4);
    CHECK(p4k.rows[1].n == 8);
    CHECK(p4k.rows[1].delta == 15);
    CHECK(p4k.rows[2].n == 12);
    CHECK(p4k.rows[2].delta == 40);
    // the 6k+1 progression tracks the conjectured limit
    const auto& p6k1 = rep.progressions[2];
    CHECK(p6k1.step == 6);
    const auto& last = p6k1.rows.back();
    CHECK(last.has_ratio);
    CHECK(last.ratio == doctest::Approx(17.9442719).epsilon(1e-6));
    CHECK_THROWS_AS(delta_ratio_report(1), Error);
}
