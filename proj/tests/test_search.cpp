#include <doctest.h>

#include <random>

#include "sumgraph/enumerate.hpp"
#include "sumgraph/error.hpp"
#include "sumgraph/fixtures.hpp"
#include "sumgraph/search.hpp"

using namespace sumgraph;

namespace {

// enumerate-all-assignments oracle for tiny instances: every vector in
// [-r, r]^n with distinct entries, checked directly against the definition
bool naive_int_exists(const Graph& g, int r, bool relaxed) {
    int n = g.n();
    std::vector<int> lab(n, -r);
    while (true) {
        bool dup = false;
        if (!relaxed)
            for (int i = 0; i < n && !dup; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (lab[i] == lab[j]) { dup = true; break; }
        if (!dup) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    int s = lab[i] + lab[j];
                    bool member = false;
                    for (int k = 0; k < n; ++k)
                        if (lab[k] == s) member = true;
                    if (member != g.edge(i, j)) ok = false;
                }
            if (ok) return true;
        }
        int i = n - 1;
        while (i >= 0 && lab[i] == r) lab[i--] = -r;
        if (i < 0) return false;
        ++lab[i];
    }
}

SearchProblem int_problem(const Graph& g, long r, bool relaxed = false, bool strong = false) {
    SearchProblem p;
    p.graph = g;
    p.domain = DomainKind::IntRadius;
    p.bound = r;
    p.relaxed = relaxed;
    p.strong = strong;
    return p;
}

}  // namespace

TEST_CASE("found witnesses always verify") {
    std::mt19937_64 rng(606);
    int verified = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_nonisomorphic(n)) {
            SearchOutcome out = solve(int_problem(g, 8));
            if (out.found) {
                CHECK(verify(*out.witness, g).ok);
                ++verified;
            }
            SearchOutcome rx = solve(int_problem(g, 6, true));
            if (rx.found) CHECK(verify(*rx.witness, g).ok);
            SearchOutcome st = solve(int_problem(g, 8, false, true));
            if (st.found) {
                CHECK(verify(*st.witness, g).ok);
                CHECK(is_strong(*st.witness));
            }
        }
    CHECK(verified > 20);
    (void)rng;
}

TEST_CASE("completeness against the naive oracle") {
    for (const auto& g : enumerate_nonisomorphic(4))
        for (int r = 1; r <= 6; ++r) {
            CHECK(solve(int_problem(g, r)).found == naive_int_exists(g, r, false));
            CHECK(solve(int_problem(g, r, true)).found == naive_int_exists(g, r, true));
        }
    for (const auto& g : enumerate_nonisomorphic(3))
        for (int r = 1; r <= 6; ++r)
            CHECK(solve(int_problem(g, r)).found == naive_int_exists(g, r, false));
}

TEST_CASE("pruning never changes outcomes") {
    std::mt19937_64 rng(123);
    std::vector<Graph> pool;
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_nonisomorphic(n)) pool.push_back(g);
    SolveOptions pruned, bare;
    bare.prune = false;
    int sampled = 0;
    while (sampled < 50) {
        const Graph& g = pool[rng() % pool.size()];
        long r = 1 + static_cast<long>(rng() % 5);
        bool relaxed = rng() % 2 == 0;
        SearchProblem p = int_problem(g, r, relaxed);
        CHECK(solve(p, pruned).found == solve(p, bare).found);
        ++sampled;
    }
    // and over a small modulus
    for (const auto& g : enumerate_nonisomorphic(4)) {
        SearchProblem p;
        p.graph = g;
        p.domain = DomainKind::Mod;
        p.bound = 7;
        CHECK(solve(p, pruned).found == solve(p, bare).found);
    }
}

TEST_CASE("monotonicity in the radius") {
    for (const auto& g : enumerate_nonisomorphic(5)) {
        bool prev = false;
        for (long r = 1; r <= 8; ++r) {
            bool now = solve(int_problem(g, r)).found;
            if (prev) CHECK(now);  // label sets embed as the radius grows
            prev = now;
        }
    }
}

TEST_CASE("known bounded negatives") {
    CHECK(!solve(int_problem(build_family(FamilySpec::cycle(4)), 30)).found);
    CHECK(!solve(int_problem(build_family(FamilySpec::complete(4)), 20)).found);
}

TEST_CASE("natural-domain search and the sum number") {
    Graph c4 = build_family(FamilySpec::cycle(4));
    SumNumberResult r = sum_number_bounded(c4, 3, 30);
    CHECK(!r.above_cap);
    CHECK(r.k == 3);
    CHECK(verify(*r.witness, build_family(parse_family_spec("C4+3K1"))).ok);

    SumNumberResult c6 = sum_number_bounded(build_family(FamilySpec::cycle(6)), 3, 50);
    CHECK(c6.k == 2);

    SumNumberResult k2 = sum_number_bounded(build_family(FamilySpec::complete(2)), 2, 10);
    CHECK(k2.k == 1);

    // connected graphs with > 1 vertex are never N-labellable with k = 0
    SearchProblem nat;
    nat.graph = c4;
    nat.domain = DomainKind::NatMax;
    nat.bound = 25;
    CHECK(!solve(nat).found);
}

TEST_CASE("radius by deepening") {
    RadiusResult r4 = radius(Graph(4), 6);
    CHECK(!r4.above_cap);
    CHECK(r4.value == 3);

    RadiusResult r6 = radius(Graph(6), 8);
    CHECK(r6.value == 5);  // exhaustive nonexistence at 4 runs inside

    RadiusResult r1 = radius(Graph(1), 3);
    CHECK(r1.value == 0);

    RadiusResult capped = radius(build_family(FamilySpec::cycle(4)), 10);
    CHECK(capped.above_cap);
}

TEST_CASE("mod sweep") {
    ModSweepResult cube = mod_sum_sweep(build_family(FamilySpec::hypercube(3)), 20);
    CHECK(cube.found);
    CHECK(cube.modulus == 15);
    CHECK(verify(*cube.witness, build_family(FamilySpec::hypercube(3))).ok);
    CHECK(cube.conclusive_bound == 2 * 2187);  // 2 * 3^7

    ModSweepResult k33 = mod_sum_sweep(build_family(FamilySpec::complete_bipartite(3, 3)), 30);
    CHECK(!k33.found);
    CHECK(k33.conclusive_bound == 486);  // 2 * 3^5
}

TEST_CASE("gcd reduction of mod labellings") {
    Labelling lab{MagmaSpec::mod_add(12), {Element(3), Element(6), Element(9)}, false};
    Labelling red = gcd_reduce_mod_labelling(lab);
    CHECK(red.spec.modulus == 4);
    CHECK(red.labels[0].num() == 1);
    CHECK(red.labels[1].num() == 2);
    CHECK(red.labels[2].num() == 3);
    CHECK(induced_graph(red) == induced_graph(lab));

    Labelling bad{MagmaSpec::mod_add(15), {Element(2), Element(4), Element(8)}, false};
    CHECK_THROWS_WITH_AS(gcd_reduce_mod_labelling(bad),
                         doctest::Contains("GcdDoesNotDivideModulus"), Error);

    // gcd 1 is untouched (the cube fixture)
    const Fixture& cube = fixture("FIX-10-cube-Z15");
    Labelling same = gcd_reduce_mod_labelling(cube.labelling);
    CHECK(same.labels == cube.labelling.labels);
    CHECK(same.spec.modulus == 15);
}

TEST_CASE("finite-magma search answers the C4 group question") {
    Graph c4 = build_family(FamilySpec::cycle(4));
    SearchProblem p;
    p.graph = c4;
    p.domain = DomainKind::FiniteMagma;
    p.magma = MagmaSpec::mod_add(5);
    SearchOutcome out = solve(p);
    CHECK(out.found);
    CHECK(verify(*out.witness, c4).ok);

    p.magma = MagmaSpec::mod_add(7);
    CHECK(!solve(p).found);

    p.magma = MagmaSpec::abelian({2, 10});
    CHECK(solve(p).found);
}

TEST_CASE("corpus counting over generated corpora") {
    auto g4 = enumerate_nonisomorphic(4);
    CorpusCount with_zero = count_corpus(g4, 16, 2);
    CHECK(with_zero.total == 11);
    CHECK(with_zero.isg == 8);
    CHECK(with_zero.risg == 10);

    CorpusCount zero_free = count_corpus(g4, 16, 2, CountMode::Both, true);
    CHECK(zero_free.isg == 5);   // the published table's convention
    CHECK(zero_free.risg == 6);

    CHECK(with_zero.isg <= with_zero.risg);
    CHECK(zero_free.isg <= zero_free.risg);

    // deterministic regardless of worker count
    CorpusCount serial = count_corpus(g4, 16, 1);
    CHECK(serial.isg == with_zero.isg);
    CHECK(serial.risg == with_zero.risg);

    std::vector<Graph> mixed{Graph(3), Graph(4)};
    CHECK_THROWS_WITH_AS(count_corpus(mixed, 8), doctest::Contains("MixedOrders"), Error);
}

TEST_CASE("node budget aborts without claiming exhaustion") {
    SearchProblem p = int_problem(build_family(FamilySpec::petersen()), 15);
    SolveOptions opts;
    opts.node_budget = 1000;
    SearchOutcome out = solve(p, opts);
    CHECK(out.aborted);
    CHECK(!out.found);
}
