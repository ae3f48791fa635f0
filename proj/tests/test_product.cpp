#include <doctest.h>

#include <random>
#include <set>

#include "sumgraph/enumerate.hpp"
#include "sumgraph/error.hpp"
#include "sumgraph/product.hpp"
#include "sumgraph/search.hpp"

using namespace sumgraph;

namespace {

Labelling int_labels(std::initializer_list<long> values) {
    Labelling lab{MagmaSpec::int_add(), {}, false};
    for (long v : values) lab.labels.emplace_back(BigInt(v));
    return lab;
}

Graph p2_k1() {
    Graph g(3);
    g.set_edge(0, 1);
    return g;
}

}  // namespace

TEST_CASE("direct products") {
    Graph k2 = build_family(FamilySpec::complete(2));
    Graph p = direct_product(k2, k2);
    CHECK(p.n() == 4);
    CHECK(p.edge_count() == 2);  // two disjoint edges
    CHECK(!is_connected(p));

    Graph c3 = build_family(FamilySpec::cycle(3));
    Graph c3c3 = direct_product(c3, c3);
    CHECK(c3c3.n() == 9);
    CHECK(c3c3.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(c3c3.degree(v) == 4);
    CHECK(is_connected(c3c3));  // odd cycle factor

    Graph gg = direct_product(p2_k1(), p2_k1());
    CHECK(gg.n() == 9);
    CHECK(gg.edge_count() == 2);  // 2 P_2 u 5 K_1
}

TEST_CASE("flatten injectivity and additivity") {
    FlattenSpec spec(2, BigInt(7));
    auto flat = flatten({{-1, -1}, {3, 3}, {2, 2}}, spec);
    CHECK(flat[0] == -8);
    CHECK(flat[1] == 24);
    CHECK(flat[2] == 16);
    CHECK(flat[0] + flat[1] == flat[2]);

    CHECK(flatten({{0, 0, 0}}, FlattenSpec(3, BigInt(9)))[0] == 0);
    CHECK_THROWS_WITH_AS(flatten({{3, 0}}, FlattenSpec(2, BigInt(5))),
                         doctest::Contains("BaseTooSmall"), Error);

    std::mt19937_64 rng(2718);
    for (int t = 0; t < 1000; ++t) {
        int k = 1 + static_cast<int>(rng() % 4);
        long c = 1 + static_cast<long>(rng() % 30);
        FlattenSpec fs(k, BigInt(2 * c + 1));
        auto tuple = [&]() {
            std::vector<BigInt> v;
            for (int i = 0; i < k; ++i) v.emplace_back(static_cast<long>(rng() % (2 * c + 1)) - c);
            return v;
        };
        auto a = tuple(), b = tuple();
        BigInt fa = flatten({a}, fs)[0], fb = flatten({b}, fs)[0];
        CHECK((a == b) == (fa == fb));  // injective under the bound
        bool sums_ok = true;
        std::vector<BigInt> s(k);
        for (int i = 0; i < k; ++i) {
            s[i] = a[i] + b[i];
            if (2 * (s[i] < 0 ? -s[i] : s[i]) >= fs.base) sums_ok = false;
        }
        if (sums_ok) CHECK(flatten({s}, fs)[0] == fa + fb);
    }
}

TEST_CASE("product labelling of the three-vertex example") {
    Labelling lab = int_labels({-1, 3, 2});
    REQUIRE(is_strong(lab));
    Graph g = p2_k1();
    REQUIRE(verify(lab, g).ok);

    Labelling prod = product_labelling(g, lab, g, lab);
    Graph target = direct_product(g, g);
    CHECK(verify(prod, target).ok);
    CHECK(is_strong(prod));
    // pairwise distinct flattened labels
    std::set<BigInt> values;
    for (const auto& e : prod.labels) values.insert(e.num());
    CHECK(values.size() == 9);
}

TEST_CASE("non-strong inputs are rejected with the counterexample explanation") {
    Labelling weak = int_labels({1, 2, 3});  // 1+1 = 2: K_2 u K_1, not strong
    Graph g(3);
    g.set_edge(0, 1);
    REQUIRE(verify(weak, g).ok);
    REQUIRE(!is_strong(weak));
    CHECK_THROWS_WITH_AS(product_labelling(g, weak, g, weak), doctest::Contains("NotStrong"),
                         Error);
}

TEST_CASE("product with an edgeless strong factor") {
    Labelling lab = int_labels({-1, 3, 2});
    Labelling iso = int_labels({1});
    Graph g = p2_k1();
    Graph k1(1);
    Labelling prod = product_labelling(g, lab, k1, iso);
    Graph target = direct_product(g, k1);
    CHECK(target.edge_count() == 0);
    CHECK(verify(prod, target).ok);
    CHECK(is_strong(prod));
}

TEST_CASE("products of strong labellings found by search stay strong") {
    std::vector<std::pair<Graph, Labelling>> strong;
    for (int n = 1; n <= 5 && strong.size() < 6; ++n)
        for (const auto& g : enumerate_nonisomorphic(n)) {
            SearchProblem p;
            p.graph = g;
            p.domain = DomainKind::IntRadius;
            p.bound = 12;
            p.strong = true;
            SearchOutcome out = solve(p);
            if (out.found) {
                strong.emplace_back(g, *out.witness);
                if (strong.size() >= 6) break;
            }
        }
    REQUIRE(strong.size() >= 4);
    int pairs = 0;
    for (const auto& [g, lg] : strong)
        for (const auto& [h, lh] : strong) {
            Labelling prod = product_labelling(g, lg, h, lh);
            Graph target = direct_product(g, h);
            CHECK(verify(prod, target).ok);
            CHECK(is_strong(prod));
            ++pairs;
        }
    CHECK(pairs >= 10);
}

TEST_CASE("weichsel connectivity rule on nontrivial connected factors") {
    std::vector<Graph> connected;
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_nonisomorphic(n))
            if (is_connected(g)) connected.push_back(g);
    for (const auto& g : connected)
        for (const auto& h : connected)
            CHECK(is_connected(direct_product(g, h)) == (has_odd_cycle(g) || has_odd_cycle(h)));
}
