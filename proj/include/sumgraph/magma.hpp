#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sumgraph/bigint.hpp"

namespace sumgraph {

enum class MagmaKind {
    IntAdd,        // (Z, +)
    NatAdd,        // (N_{>=1}, +)
    AbsDiff,       // (N_{>=1}, |x-y|)
    ModAdd,        // (Z_m, +)
    ModMulUnits,   // (Z_m^*, *)
    AbelianProduct,// Z_{m1} x ... x Z_{mk}, componentwise +
    SetMagma,      // subsets of an s-element set under a set operation
    TableMagma,    // explicit finite operation table
};

enum class SetOp { Union, Intersection, SymDiff, ComplementUnion, ComplementIntersection };

/**
 * Description of a carrier-and-operation pair. Elements carry no reference
 * to their spec; every operation takes the spec explicitly.
 */
struct MagmaSpec {
    MagmaKind kind = MagmaKind::IntAdd;
    BigInt modulus = 0;             // ModAdd / ModMulUnits
    std::vector<BigInt> moduli;     // AbelianProduct
    int universe = 0;               // SetMagma
    SetOp set_op = SetOp::Union;    // SetMagma
    int table_size = 0;             // TableMagma
    std::vector<int> table;         // TableMagma, row-major
    std::vector<std::string> table_names;  // optional element rendering

    static MagmaSpec int_add() { MagmaSpec s; s.kind = MagmaKind::IntAdd; return s; }
    static MagmaSpec nat_add() { MagmaSpec s; s.kind = MagmaKind::NatAdd; return s; }
    static MagmaSpec abs_diff() { MagmaSpec s; s.kind = MagmaKind::AbsDiff; return s; }
    static MagmaSpec mod_add(BigInt m);
    static MagmaSpec mod_mul_units(BigInt m);
    static MagmaSpec abelian(std::vector<BigInt> moduli);
    static MagmaSpec set_magma(int universe, SetOp op);
    static MagmaSpec table_magma(int size, std::vector<int> table,
                                 std::vector<std::string> names = {});

    bool finite() const;
    BigInt carrier_size() const;  // InfiniteCarrier for the Z/N kinds
    bool commutative() const;     // TableMagma: checked against the table
    bool operator==(const MagmaSpec&) const = default;

    std::string describe() const;
};

/**
 * Element of some magma carrier: a plain integer (IntAdd/NatAdd/AbsDiff, a
 * residue, or a table index), a residue tuple, or a subset bitmask.
 */
struct Element {
    std::variant<BigInt, std::vector<BigInt>, uint64_t> v;

    Element() : v(BigInt(0)) {}
    Element(BigInt n) : v(std::move(n)) {}
    Element(long n) : v(BigInt(n)) {}
    Element(int n) : v(BigInt(n)) {}
    Element(std::vector<BigInt> t) : v(std::move(t)) {}
    static Element subset(uint64_t bits) { Element e; e.v = bits; return e; }

    const BigInt& num() const { return std::get<BigInt>(v); }
    const std::vector<BigInt>& tuple() const { return std::get<std::vector<BigInt>>(v); }
    uint64_t bits() const { return std::get<uint64_t>(v); }

    bool operator==(const Element&) const = default;
    bool operator<(const Element& o) const { return v < o.v; }

    std::string render(const MagmaSpec& spec) const;
};

// exact magma operation; errors: DomainMismatch for elements outside the carrier
Element op(const MagmaSpec& spec, const Element& a, const Element& b);

bool element_valid(const MagmaSpec& spec, const Element& e);
void require_valid(const MagmaSpec& spec, const Element& e);

// each element exactly once, deterministic order; errors: InfiniteCarrier
std::vector<Element> enumerate_carrier(const MagmaSpec& spec);

// one AbelianProduct spec per isomorphism class of abelian groups of order n,
// in invariant-factor form d1 | d2 | ... | dk
std::vector<MagmaSpec> abelian_groups_of_order(long n);

}  // namespace sumgraph
