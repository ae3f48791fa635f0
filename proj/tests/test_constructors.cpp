#include <doctest.h>

#include <set>

#include "sumgraph/constructors.hpp"
#include "sumgraph/error.hpp"
#include "sumgraph/fixtures.hpp"

using namespace sumgraph;

namespace {

BigInt label_radius(const Labelling& lab) {
    BigInt mx = 0;
    for (const auto& e : lab.labels) mx = std::max(mx, e.num() < 0 ? -e.num() : e.num());
    return mx;
}

}  // namespace

TEST_CASE("harary path labelling") {
    Labelling p6 = harary_path(6);
    std::vector<long> want{1, 2, -1, 3, -4, 7};
    REQUIRE(p6.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(p6.labels[i].num() == want[i]);
    CHECK(verify(p6, build_family(FamilySpec::path(6))).ok);

    Labelling p4 = harary_path(4);
    for (int i = 0; i < 4; ++i) CHECK(p4.labels[i].num() == want[i]);

    CHECK(verify(harary_path(10), build_family(FamilySpec::path(10))).ok);
    CHECK_THROWS_WITH_AS(harary_path(3), doctest::Contains("TooSmall"), Error);
}

TEST_CASE("harary-style matching carries one spurious chord") {
    Labelling m4 = matching_harary_style(4);
    std::set<BigInt> values;
    for (const auto& e : m4.labels) values.insert(e.num());
    CHECK(values == std::set<BigInt>{6, 7, 8, -3, -4, -5, 3, 5});
    CHECK(label_radius(matching_harary_style(5)) == 11);  // 3m-4

    for (int m = 4; m <= 20; ++m) {
        Labelling lab = matching_harary_style(m);
        Verdict v = verify(lab, build_family(FamilySpec::matching(m)));
        CHECK(!v.ok);
        REQUIRE(v.spurious_edges.size() == 1);
        CHECK(v.missing_edges.empty());
        // the chord joins the labels 3m-4 and -(m-1); its sum 2m-3 is a label
        std::set<BigInt> chord{lab.labels[v.spurious_edges[0].u].num(),
                               lab.labels[v.spurious_edges[0].v].num()};
        CHECK(chord == std::set<BigInt>{3L * m - 4, -(m - 1L)});
        CHECK(v.spurious_edges[0].sum.num() == 2L * m - 3);
    }
}

TEST_CASE("li matching verifies with minimal range") {
    Labelling m3 = matching_li(3);
    std::set<BigInt> values;
    for (const auto& e : m3.labels) values.insert(e.num());
    CHECK(values == std::set<BigInt>{-1, 1, 3, 5, 7, 8});
    for (int m = 3; m <= 20; ++m) {
        Labelling lab = matching_li(m);
        CHECK(verify(lab, build_family(FamilySpec::matching(m))).ok);
        BigInt lo = lab.labels[0].num(), hi = lo;
        for (const auto& e : lab.labels) {
            lo = std::min(lo, e.num());
            hi = std::max(hi, e.num());
        }
        CHECK(hi - lo == 4 * m - 3);
    }
    CHECK_THROWS_AS(matching_li(2), Error);
}

TEST_CASE("empty graph labellings") {
    Labelling e5 = empty_graph(5);
    std::set<BigInt> values;
    for (const auto& e : e5.labels) values.insert(e.num());
    CHECK(values == std::set<BigInt>{-4, -3, 2, 3, 4});
    for (int n = 1; n <= 50; ++n) {
        Labelling lab = empty_graph(n);
        REQUIRE(lab.size() == n);
        CHECK(verify(lab, Graph(n)).ok);
        CHECK(label_radius(lab) == (n > 1 ? n - 1 : 0));
    }
    Labelling alt4 = empty_graph_even_alt(4);
    std::set<BigInt> vals4;
    for (const auto& e : alt4.labels) vals4.insert(e.num());
    CHECK(vals4 == std::set<BigInt>{-3, -1, 1, 3});
    for (int n = 2; n <= 50; n += 2) {
        CHECK(verify(empty_graph_even_alt(n), Graph(n)).ok);
        CHECK(label_radius(empty_graph_even_alt(n)) == n - 1);
    }
}

TEST_CASE("C4 over abelian groups") {
    Graph c4 = build_family(FamilySpec::cycle(4));
    Labelling z5 = c4_over_abelian(MagmaSpec::mod_add(5), Element(BigInt(1)));
    std::vector<long> want{1, 3, 4, 2};
    for (int i = 0; i < 4; ++i) CHECK(z5.labels[i].num() == want[i]);
    CHECK(verify(z5, c4).ok);

    Labelling z10 = c4_over_abelian(MagmaSpec::mod_add(10), Element(BigInt(2)));
    CHECK(verify(z10, c4).ok);

    CHECK_THROWS_WITH_AS(c4_over_abelian(MagmaSpec::mod_add(7), Element(BigInt(3))),
                         doctest::Contains("InvalidGenerator"), Error);
    CHECK_THROWS_WITH_AS(c4_over_abelian(MagmaSpec::mod_add(5), Element(BigInt(0))),
                         doctest::Contains("InvalidGenerator"), Error);
}

TEST_CASE("fibonacci cycles reproduce the printed lists") {
    auto c15 = fibonacci_cycle(MagmaSpec::mod_add(682), Element(BigInt(1)), Element(BigInt(81)), 15);
    CHECK(c15.conditions_ok);
    CHECK(c15.labelling.labels == fixture("FIX-5-C15-Z682").labelling.labels);
    CHECK(verify(c15.labelling, build_family(FamilySpec::cycle(15))).ok);

    auto c7 = fibonacci_cycle(MagmaSpec::mod_add(29), Element(BigInt(1)), Element(BigInt(24)), 7);
    CHECK(c7.labelling.labels == fixture("FIX-5-C7-Z29").labelling.labels);
    CHECK(verify(c7.labelling, build_family(FamilySpec::cycle(7))).ok);

    auto c6 = fibonacci_cycle(MagmaSpec::abelian({4, 4}), Element(std::vector<BigInt>{1, 2}),
                              Element(std::vector<BigInt>{0, 1}), 6);
    CHECK(c6.conditions_ok);
    CHECK(verify(c6.labelling, build_family(FamilySpec::cycle(6))).ok);

    // violated necessary condition is reported, construction still returned
    auto bad = fibonacci_cycle(MagmaSpec::mod_add(683), Element(BigInt(1)), Element(BigInt(81)), 15);
    CHECK(!bad.conditions_ok);
    CHECK(bad.labelling.size() == 15);
}

TEST_CASE("C_4l theorem labelling") {
    CHECK_THROWS_WITH_AS(c4l_theorem_labelling(1), doctest::Contains("DegenerateGroup"), Error);

    Labelling l2 = c4l_theorem_labelling(2);
    REQUIRE(l2.size() == 8);
    std::vector<std::pair<long, long>> want{{0, 1}, {1, 0}, {1, 1}, {2, 1},
                                            {0, 2}, {2, 0}, {2, 2}, {1, 2}};
    for (int i = 0; i < 8; ++i) {
        CHECK(l2.labels[i].tuple()[0] == want[i].first);
        CHECK(l2.labels[i].tuple()[1] == want[i].second);
    }
    // the l = 2 instance has chords; l = 3..6 verify
    CHECK(!verify(l2, build_family(FamilySpec::cycle(8))).ok);
    for (int l = 3; l <= 6; ++l)
        CHECK(verify(c4l_theorem_labelling(l), build_family(FamilySpec::cycle(4 * l))).ok);
}

TEST_CASE("union cycles") {
    Labelling k2 = union_cycle(2);
    CHECK(k2.labels[0].bits() == 0b0001);          // {1}
    CHECK(k2.labels[1].bits() == 0b0111);          // {1,2,3}
    CHECK(k2.labels[2].bits() == 0b0010);          // {2}
    CHECK(k2.labels[3].bits() == 0b1011);          // {1,2,4}
    for (int k = 2; k <= 6; ++k)
        CHECK(verify(union_cycle(k), build_family(FamilySpec::cycle(2 * k))).ok);
    CHECK_THROWS_AS(union_cycle(1), Error);
}

TEST_CASE("union cliques") {
    for (int s = 0; s <= 5; ++s)
        for (int n = 1; n <= s + 1; ++n)
            CHECK(verify(union_clique(n, s), build_family(FamilySpec::complete(n))).ok);
    CHECK_THROWS_WITH_AS(union_clique(4, 2), doctest::Contains("UniverseTooSmall"), Error);
}

TEST_CASE("boolean cliques") {
    for (long m : {1, 2, 3, 4, 7, 8, 15, 16})
        CHECK(verify(boolean_clique(m), build_family(FamilySpec::complete(static_cast<int>(m)))).ok);
    CHECK(is_strong(boolean_clique(7)));    // empty set removed
    CHECK(!is_strong(boolean_clique(8)));   // empty set present: a (+) a = {}
    for (long m : {5, 6, 9})
        CHECK_THROWS_WITH_AS(boolean_clique(m), doctest::Contains("NotRepresentable"), Error);
}

TEST_CASE("relaxed cliques") {
    for (int n : {1, 4, 10}) {
        Labelling lab = relaxed_clique(n);
        CHECK(verify(lab, build_family(FamilySpec::complete(n))).ok);
        CHECK(!is_strong(lab));
    }
}

TEST_CASE("constructor outputs type-check against their specs") {
    for (const auto& lab :
         {harary_path(8), matching_harary_style(6), matching_li(5), empty_graph(9)})
        CHECK_NOTHROW(validate_labelling(lab));
    CHECK_NOTHROW(validate_labelling(union_cycle(4)));
    CHECK_NOTHROW(validate_labelling(boolean_clique(8)));
    CHECK_NOTHROW(validate_labelling(c4l_theorem_labelling(3)));
}
