#include <doctest.h>

#include <random>
#include <set>

#include "sumgraph/error.hpp"
#include "sumgraph/fixtures.hpp"
#include "sumgraph/labelling.hpp"

using namespace sumgraph;

namespace {

Labelling int_labels(std::initializer_list<long> values, bool relaxed = false) {
    Labelling lab{MagmaSpec::int_add(), {}, relaxed};
    for (long v : values) lab.labels.emplace_back(BigInt(v));
    return lab;
}

// Independent double-loop reference: membership against the multiset support,
// testing both operand orders. Kept deliberately naive.
Graph reference_induced(const Labelling& lab) {
    int n = lab.size();
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Element s1 = op(lab.spec, lab.labels[i], lab.labels[j]);
            Element s2 = op(lab.spec, lab.labels[j], lab.labels[i]);
            bool member = false;
            for (int k = 0; k < n; ++k)
                if (lab.labels[k] == s1 || lab.labels[k] == s2) member = true;
            if (member) g.set_edge(i, j);
        }
    }
    return g;
}

MagmaSpec random_spec(std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return MagmaSpec::int_add();
        case 1: return MagmaSpec::mod_add(2 + static_cast<long>(rng() % 19));
        default: {
            SetOp ops[] = {SetOp::Union, SetOp::Intersection, SetOp::SymDiff,
                           SetOp::ComplementUnion, SetOp::ComplementIntersection};
            return MagmaSpec::set_magma(1 + static_cast<int>(rng() % 4), ops[rng() % 5]);
        }
    }
}

Labelling random_labelling(std::mt19937_64& rng, const MagmaSpec& spec, int n, bool relaxed) {
    Labelling lab{spec, {}, relaxed};
    std::set<Element> used;
    int guard = 0;
    while (static_cast<int>(lab.labels.size()) < n) {
        Element e;
        if (spec.kind == MagmaKind::IntAdd)
            e = Element(static_cast<long>(rng() % 41) - 20);
        else if (spec.kind == MagmaKind::ModAdd)
            e = Element(BigInt(static_cast<long>(rng() % static_cast<unsigned long>(
                            static_cast<long>(spec.modulus)))));
        else
            e = Element::subset(rng() & ((uint64_t{1} << spec.universe) - 1));
        if (!relaxed) {
            if (used.count(e)) {
                if (++guard > 1000) break;
                continue;
            }
            used.insert(e);
        }
        lab.labels.push_back(e);
    }
    return lab;
}

}  // namespace

TEST_CASE("induced graph: the six-vertex integral example") {
    Labelling lab = int_labels({-3, 1, -2, -1, -4, 3});
    Graph g = induced_graph(lab);
    CHECK(g.edge_count() == 7);
    const Fixture& fx = fixture("FIX-2.1-zgraph");
    CHECK(g == fx.target);
}

TEST_CASE("induced graph: relaxed zero labels give a clique") {
    Labelling lab = int_labels({0, 0, 0}, true);
    Graph g = induced_graph(lab);
    CHECK(g.edge_count() == 3);
    CHECK(!is_strong(lab));
}

TEST_CASE("induced graph: Fibonacci C7 over Z29") {
    Labelling lab{MagmaSpec::mod_add(29), {}, false};
    for (long v : {1, 24, 25, 20, 16, 7, 23}) lab.labels.emplace_back(BigInt(v));
    Graph g = induced_graph(lab);
    CHECK(g == build_family(FamilySpec::cycle(7)));
}

TEST_CASE("verify reports witnesses") {
    Graph c4 = build_family(FamilySpec::cycle(4));
    Verdict bad = verify(int_labels({1, 2, 3, 4}), c4);
    CHECK(!bad.ok);
    // the one spurious chord: labels 1 and 3 sum to 4, which sits at vertex 3
    REQUIRE(bad.spurious_edges.size() == 1);
    CHECK(bad.spurious_edges[0].u == 0);
    CHECK(bad.spurious_edges[0].v == 2);
    CHECK(bad.spurious_edges[0].sum.num() == 4);
    CHECK(bad.spurious_edges[0].witness_vertex == 3);
    CHECK(bad.missing_edges.size() == 3);

    CHECK_THROWS_WITH_AS(verify(int_labels({1, 2}), c4), doctest::Contains("SizeMismatch"), Error);
    CHECK_THROWS_WITH_AS(verify(int_labels({1, 1, 2, 3}), c4),
                         doctest::Contains("DistinctnessViolated"), Error);
}

TEST_CASE("is_strong") {
    CHECK(is_strong(int_labels({-1, 3, 2})));
    CHECK(!is_strong(int_labels({1, 2, 3})));   // 1+1 = 2
    CHECK(!is_strong(int_labels({0, 0, 0}, true)));
    // invariant under permutations of the label sequence
    CHECK(is_strong(int_labels({3, -1, 2})));
    CHECK(is_strong(int_labels({2, 3, -1})));
}

TEST_CASE("verify(lab, induced_graph(lab)) always holds") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        MagmaSpec spec = random_spec(rng);
        bool relaxed = rng() % 2 == 0;
        Labelling lab = random_labelling(rng, spec, 1 + static_cast<int>(rng() % 7), relaxed);
        Graph g = induced_graph(lab);
        CHECK(verify(lab, g).ok);
    }
}

TEST_CASE("oracle equivalence on random labellings") {
    std::mt19937_64 rng(31337);
    int checked = 0;
    while (checked < 1000) {
        MagmaSpec spec = random_spec(rng);
        bool relaxed = rng() % 2 == 0;
        Labelling lab = random_labelling(rng, spec, 1 + static_cast<int>(rng() % 7), relaxed);
        Graph mine = induced_graph(lab);
        Graph ref = reference_induced(lab);
        CHECK(mine == ref);
        ++checked;
    }
}

TEST_CASE("sum-graph isomorphism between Z5 and the units mod 11") {
    const Fixture& a = fixture("FIX-4-Z5");
    const Fixture& b = fixture("FIX-4-U11");
    CHECK(check_sum_iso(a.labelling, b.labelling, {0, 1, 2, 3}));
    CHECK(check_sum_iso(a.labelling, a.labelling, {0, 1, 2, 3}));  // identity
    // swapping two images breaks the structure
    CHECK(!check_sum_iso(a.labelling, b.labelling, {1, 0, 2, 3}));
    CHECK_THROWS_WITH_AS(check_sum_iso(a.labelling, b.labelling, {0, 0, 2, 3}),
                         doctest::Contains("NotBijective"), Error);
}

TEST_CASE("universal magma labelling verifies") {
    Graph pete = build_family(FamilySpec::petersen());
    auto [spec, lab] = universal_magma(pete);
    CHECK(verify(lab, pete).ok);
}
