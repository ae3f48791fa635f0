#include <doctest.h>

#include <random>

#include "sumgraph/error.hpp"
#include "sumgraph/labelling.hpp"
#include "sumgraph/magma.hpp"

using namespace sumgraph;

namespace {

Element random_element(std::mt19937_64& rng, const MagmaSpec& spec) {
    auto carrier = enumerate_carrier(spec);
    return carrier[rng() % carrier.size()];
}

std::vector<MagmaSpec> finite_specs_under_test() {
    std::vector<MagmaSpec> specs;
    for (long m : {2, 5, 12}) specs.push_back(MagmaSpec::mod_add(m));
    specs.push_back(MagmaSpec::mod_mul_units(11));
    specs.push_back(MagmaSpec::abelian({2, 2}));
    specs.push_back(MagmaSpec::abelian({4, 4}));
    for (SetOp op : {SetOp::Union, SetOp::Intersection, SetOp::SymDiff, SetOp::ComplementUnion,
                     SetOp::ComplementIntersection})
        specs.push_back(MagmaSpec::set_magma(3, op));
    return specs;
}

}  // namespace

TEST_CASE("basic operations") {
    CHECK(op(MagmaSpec::int_add(), Element(-3), Element(1)).num() == -2);
    CHECK(op(MagmaSpec::mod_mul_units(11), Element(3), Element(5)).num() == 4);
    CHECK(op(MagmaSpec::abs_diff(), Element(4), Element(7)).num() == 3);
    CHECK(op(MagmaSpec::abs_diff(), Element(4), Element(4)).num() == 0);

    // complement of the union: {1} (+) {2} = {3,4} in a 4-element universe
    MagmaSpec cu = MagmaSpec::set_magma(4, SetOp::ComplementUnion);
    Element a = Element::subset(0b0001), b = Element::subset(0b0010);
    CHECK(op(cu, a, b).bits() == 0b1100);

    MagmaSpec z5 = MagmaSpec::mod_add(5);
    CHECK(op(z5, Element(3), Element(4)).num() == 2);
    CHECK_THROWS_WITH_AS(op(z5, Element(7), Element(1)), doctest::Contains("DomainMismatch"), Error);
    CHECK_THROWS_AS(op(MagmaSpec::mod_mul_units(12), Element(4), Element(5)), Error);
    CHECK_THROWS_AS(op(MagmaSpec::nat_add(), Element(0), Element(1)), Error);
}

TEST_CASE("carrier enumeration") {
    CHECK(enumerate_carrier(MagmaSpec::mod_add(5)).size() == 5);
    CHECK(enumerate_carrier(MagmaSpec::abelian({2, 2})).size() == 4);
    CHECK(enumerate_carrier(MagmaSpec::set_magma(3, SetOp::Union)).size() == 8);
    CHECK(enumerate_carrier(MagmaSpec::mod_mul_units(12)).size() == 4);
    CHECK_THROWS_WITH_AS(enumerate_carrier(MagmaSpec::int_add()),
                         doctest::Contains("InfiniteCarrier"), Error);
    // deterministic order, each element exactly once
    auto e1 = enumerate_carrier(MagmaSpec::abelian({3, 2}));
    auto e2 = enumerate_carrier(MagmaSpec::abelian({3, 2}));
    CHECK(e1 == e2);
    CHECK(e1.size() == 6);
}

TEST_CASE("commutativity on random pairs") {
    std::mt19937_64 rng(11);
    for (const auto& spec : finite_specs_under_test()) {
        for (int t = 0; t < 10000 / 12; ++t) {
            Element a = random_element(rng, spec), b = random_element(rng, spec);
            CHECK(op(spec, a, b) == op(spec, b, a));
        }
        CHECK(spec.commutative());
    }
}

TEST_CASE("associativity for the group kinds") {
    std::mt19937_64 rng(12);
    std::vector<MagmaSpec> groups = {MagmaSpec::mod_add(12), MagmaSpec::abelian({4, 4}),
                                     MagmaSpec::mod_mul_units(11),
                                     MagmaSpec::set_magma(4, SetOp::SymDiff)};
    for (const auto& spec : groups)
        for (int t = 0; t < 300; ++t) {
            Element a = random_element(rng, spec);
            Element b = random_element(rng, spec);
            Element c = random_element(rng, spec);
            CHECK(op(spec, op(spec, a, b), c) == op(spec, a, op(spec, b, c)));
        }
}

TEST_CASE("symmetric difference is a Boolean group") {
    MagmaSpec sd = MagmaSpec::set_magma(4, SetOp::SymDiff);
    for (const auto& a : enumerate_carrier(sd)) CHECK(op(sd, a, a).bits() == 0);
}

TEST_CASE("complement map is a magma isomorphism") {
    // op_union(a, b) complemented equals op_intersection(a~, b~), and the same
    // for the complemented operations, on every pair for s <= 4
    for (int s = 0; s <= 4; ++s) {
        uint64_t mask = (uint64_t{1} << s) - 1;
        MagmaSpec un = MagmaSpec::set_magma(s, SetOp::Union);
        MagmaSpec in = MagmaSpec::set_magma(s, SetOp::Intersection);
        MagmaSpec cu = MagmaSpec::set_magma(s, SetOp::ComplementUnion);
        MagmaSpec ci = MagmaSpec::set_magma(s, SetOp::ComplementIntersection);
        for (uint64_t a = 0; a <= mask; ++a)
            for (uint64_t b = 0; b <= mask; ++b) {
                Element ea = Element::subset(a), eb = Element::subset(b);
                Element ca = Element::subset(~a & mask), cb = Element::subset(~b & mask);
                CHECK((~op(un, ea, eb).bits() & mask) == op(in, ca, cb).bits());
                CHECK((~op(cu, ea, eb).bits() & mask) == op(ci, ca, cb).bits());
                if (s == 0 && a == 0 && b == 0) break;
            }
    }
}

TEST_CASE("abelian groups of a given order") {
    auto g4 = abelian_groups_of_order(4);
    REQUIRE(g4.size() == 2);
    CHECK(g4[0].moduli == std::vector<BigInt>{4});
    CHECK(g4[1].moduli == std::vector<BigInt>{2, 2});

    CHECK(abelian_groups_of_order(5).size() == 1);
    CHECK(abelian_groups_of_order(16).size() == 5);  // partitions of 4
    CHECK(abelian_groups_of_order(1).size() == 1);
    CHECK(abelian_groups_of_order(360).size() == 6);  // p(3)*p(2)*p(1)

    for (long n : {12, 16, 24}) {
        for (const auto& spec : abelian_groups_of_order(n)) {
            BigInt size = 1;
            for (const auto& m : spec.moduli) size *= m;
            CHECK(size == n);
            // invariant factors divide in sequence
            for (size_t i = 0; i + 1 < spec.moduli.size(); ++i)
                CHECK(spec.moduli[i + 1] % spec.moduli[i] == 0);
        }
    }
}

TEST_CASE("universal magma realises any graph") {
    for (const char* name : {"K2", "3K1", "petersen", "C5"}) {
        Graph g = build_family(parse_family_spec(name));
        auto [spec, lab] = universal_magma(g);
        CHECK(spec.table_size == g.n() + 1);
        CHECK(verify(lab, g).ok);
    }
    // the table for K2: both orders of the real pair map to v0
    auto [spec, lab] = universal_magma(build_family(FamilySpec::complete(2)));
    CHECK(spec.table[0 * 3 + 1] == 0);
    CHECK(spec.table[1 * 3 + 0] == 0);
    CHECK(spec.table[0 * 3 + 0] == 2);
}
