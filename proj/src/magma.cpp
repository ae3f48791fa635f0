#include "sumgraph/magma.hpp"

#include <algorithm>
#include <map>

#include "sumgraph/error.hpp"

namespace sumgraph {

MagmaSpec MagmaSpec::mod_add(BigInt m) {
    if (m < 1) throw Error("InvalidParameter", "ModAdd needs modulus >= 1");
    MagmaSpec s;
    s.kind = MagmaKind::ModAdd;
    s.modulus = std::move(m);
    return s;
}

MagmaSpec MagmaSpec::mod_mul_units(BigInt m) {
    if (m < 2) throw Error("InvalidParameter", "ModMulUnits needs modulus >= 2");
    MagmaSpec s;
    s.kind = MagmaKind::ModMulUnits;
    s.modulus = std::move(m);
    return s;
}

MagmaSpec MagmaSpec::abelian(std::vector<BigInt> moduli) {
    for (const auto& m : moduli)
        if (m < 1) throw Error("InvalidParameter", "AbelianProduct moduli must be >= 1");
    MagmaSpec s;
    s.kind = MagmaKind::AbelianProduct;
    s.moduli = std::move(moduli);
    return s;
}

MagmaSpec MagmaSpec::set_magma(int universe, SetOp op) {
    if (universe < 0 || universe > 62)
        throw Error("InvalidParameter", "SetMagma universe size must be in 0..62");
    MagmaSpec s;
    s.kind = MagmaKind::SetMagma;
    s.universe = universe;
    s.set_op = op;
    return s;
}

MagmaSpec MagmaSpec::table_magma(int size, std::vector<int> table, std::vector<std::string> names) {
    if (size < 1 || size > 64) throw Error("InvalidParameter", "TableMagma capped at 64 elements");
    if (static_cast<int>(table.size()) != size * size)
        throw Error("InvalidParameter", "TableMagma table must be size*size");
    for (int x : table)
        if (x < 0 || x >= size) throw Error("InvalidParameter", "TableMagma entry outside carrier");
    MagmaSpec s;
    s.kind = MagmaKind::TableMagma;
    s.table_size = size;
    s.table = std::move(table);
    s.table_names = std::move(names);
    return s;
}

bool MagmaSpec::finite() const {
    switch (kind) {
        case MagmaKind::IntAdd:
        case MagmaKind::NatAdd:
        case MagmaKind::AbsDiff: return false;
        default: return true;
    }
}

BigInt MagmaSpec::carrier_size() const {
    switch (kind) {
        case MagmaKind::ModAdd: return modulus;
        case MagmaKind::ModMulUnits: {
            BigInt count = 0;
            for (BigInt x = 0; x < modulus; ++x)
                if (big_gcd(x, modulus) == 1) ++count;
            return count;
        }
        case MagmaKind::AbelianProduct: {
            BigInt p = 1;
            for (const auto& m : moduli) p *= m;
            return p;
        }
        case MagmaKind::SetMagma: return BigInt(1) << universe;
        case MagmaKind::TableMagma: return table_size;
        default: throw Error("InfiniteCarrier", "carrier is infinite");
    }
}

bool MagmaSpec::commutative() const {
    if (kind != MagmaKind::TableMagma) return true;
    for (int a = 0; a < table_size; ++a)
        for (int b = a + 1; b < table_size; ++b)
            if (table[a * table_size + b] != table[b * table_size + a]) return false;
    return true;
}

std::string MagmaSpec::describe() const {
    switch (kind) {
        case MagmaKind::IntAdd: return "Z";
        case MagmaKind::NatAdd: return "N";
        case MagmaKind::AbsDiff: return "absdiff";
        case MagmaKind::ModAdd: return "Z" + modulus.str();
        case MagmaKind::ModMulUnits: return "U" + modulus.str();
        case MagmaKind::AbelianProduct: {
            std::string out;
            for (const auto& m : moduli) {
                if (!out.empty()) out += "x";
                out += "Z" + m.str();
            }
            return out.empty() ? "Z1" : out;
        }
        case MagmaKind::SetMagma: {
            const char* names[] = {"union", "intersection", "symdiff",
                                   "complement-union", "complement-intersection"};
            return "set" + std::to_string(universe) + ":" + names[static_cast<int>(set_op)];
        }
        case MagmaKind::TableMagma: return "table" + std::to_string(table_size);
    }
    return "?";
}

std::string Element::render(const MagmaSpec& spec) const {
    switch (spec.kind) {
        case MagmaKind::AbelianProduct: {
            std::string out = "(";
            const auto& t = tuple();
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) out += ",";
                out += t[i].str();
            }
            return out + ")";
        }
        case MagmaKind::SetMagma: {
            std::string out = "{";
            bool first = true;
            for (int i = 0; i < spec.universe; ++i)
                if (bits() >> i & 1) {
                    if (!first) out += ",";
                    out += std::to_string(i + 1);
                    first = false;
                }
            return out + "}";
        }
        case MagmaKind::TableMagma: {
            long idx = static_cast<long>(num());
            if (idx >= 0 && idx < static_cast<long>(spec.table_names.size()))
                return spec.table_names[idx];
            return num().str();
        }
        default: return num().str();
    }
}

bool element_valid(const MagmaSpec& spec, const Element& e) {
    switch (spec.kind) {
        case MagmaKind::IntAdd:
            return std::holds_alternative<BigInt>(e.v);
        case MagmaKind::NatAdd:
        case MagmaKind::AbsDiff:
            return std::holds_alternative<BigInt>(e.v) && e.num() >= 1;
        case MagmaKind::ModAdd:
            return std::holds_alternative<BigInt>(e.v) && e.num() >= 0 && e.num() < spec.modulus;
        case MagmaKind::ModMulUnits:
            return std::holds_alternative<BigInt>(e.v) && e.num() >= 0 && e.num() < spec.modulus &&
                   big_gcd(e.num(), spec.modulus) == 1;
        case MagmaKind::AbelianProduct: {
            if (!std::holds_alternative<std::vector<BigInt>>(e.v)) return false;
            const auto& t = e.tuple();
            if (t.size() != spec.moduli.size()) return false;
            for (size_t i = 0; i < t.size(); ++i)
                if (t[i] < 0 || t[i] >= spec.moduli[i]) return false;
            return true;
        }
        case MagmaKind::SetMagma:
            return std::holds_alternative<uint64_t>(e.v) &&
                   (spec.universe == 64 || e.bits() < (uint64_t{1} << spec.universe));
        case MagmaKind::TableMagma:
            return std::holds_alternative<BigInt>(e.v) && e.num() >= 0 && e.num() < spec.table_size;
    }
    return false;
}

void require_valid(const MagmaSpec& spec, const Element& e) {
    if (!element_valid(spec, e))
        throw Error("DomainMismatch", "element not in carrier of " + spec.describe());
}

Element op(const MagmaSpec& spec, const Element& a, const Element& b) {
    require_valid(spec, a);
    require_valid(spec, b);
    switch (spec.kind) {
        case MagmaKind::IntAdd:
        case MagmaKind::NatAdd:
            return Element(a.num() + b.num());
        case MagmaKind::AbsDiff: {
            BigInt d = a.num() - b.num();
            if (d < 0) d = -d;
            return Element(d);  // may be 0, which is never a valid label
        }
        case MagmaKind::ModAdd:
            return Element((a.num() + b.num()) % spec.modulus);
        case MagmaKind::ModMulUnits:
            return Element((a.num() * b.num()) % spec.modulus);
        case MagmaKind::AbelianProduct: {
            std::vector<BigInt> t(spec.moduli.size());
            for (size_t i = 0; i < t.size(); ++i)
                t[i] = (a.tuple()[i] + b.tuple()[i]) % spec.moduli[i];
            return Element(std::move(t));
        }
        case MagmaKind::SetMagma: {
            uint64_t mask = spec.universe == 64 ? ~uint64_t{0}
                                                : (uint64_t{1} << spec.universe) - 1;
            uint64_t x = a.bits(), y = b.bits();
            switch (spec.set_op) {
                case SetOp::Union: return Element::subset(x | y);
                case SetOp::Intersection: return Element::subset(x & y);
                case SetOp::SymDiff: return Element::subset(x ^ y);
                case SetOp::ComplementUnion: return Element::subset(~(x | y) & mask);
                case SetOp::ComplementIntersection: return Element::subset(~(x & y) & mask);
            }
            break;
        }
        case MagmaKind::TableMagma: {
            int ia = static_cast<int>(a.num()), ib = static_cast<int>(b.num());
            return Element(BigInt(spec.table[ia * spec.table_size + ib]));
        }
    }
    throw Error("DomainMismatch", "unhandled magma kind");
}

std::vector<Element> enumerate_carrier(const MagmaSpec& spec) {
    if (!spec.finite()) throw Error("InfiniteCarrier", spec.describe() + " cannot be enumerated");
    std::vector<Element> out;
    switch (spec.kind) {
        case MagmaKind::ModAdd:
            for (BigInt x = 0; x < spec.modulus; ++x) out.emplace_back(x);
            break;
        case MagmaKind::ModMulUnits:
            for (BigInt x = 0; x < spec.modulus; ++x)
                if (big_gcd(x, spec.modulus) == 1) out.emplace_back(x);
            break;
        case MagmaKind::AbelianProduct: {
            std::vector<BigInt> cur(spec.moduli.size(), 0);
            while (true) {
                out.emplace_back(cur);
                size_t i = cur.size();
                while (i > 0) {
                    --i;
                    if (++cur[i] < spec.moduli[i]) break;
                    cur[i] = 0;
                    if (i == 0) return out;
                }
                if (cur.empty()) break;
            }
            break;
        }
        case MagmaKind::SetMagma:
            for (uint64_t m = 0; m < (uint64_t{1} << spec.universe); ++m)
                out.push_back(Element::subset(m));
            break;
        case MagmaKind::TableMagma:
            for (int i = 0; i < spec.table_size; ++i) out.emplace_back(BigInt(i));
            break;
        default: break;
    }
    return out;
}

namespace {

void partitions_of(int k, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(k, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(k - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MagmaSpec> abelian_groups_of_order(long n) {
    if (n < 1) throw Error("InvalidParameter", "group order must be >= 1");
    // factor n, partition each prime exponent, then zip prime powers
    // (largest first) into invariant factors d1 | d2 | ... | dk
    std::map<long, int> factors;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++factors[p];
            m /= p;
        }
    if (m > 1) ++factors[m];

    std::vector<std::pair<long, std::vector<std::vector<int>>>> choices;
    for (auto [p, e] : factors) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_of(e, e, cur, parts);
        choices.emplace_back(p, std::move(parts));
    }

    std::vector<MagmaSpec> out;
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        size_t len = 1;
        for (size_t i = 0; i < choices.size(); ++i)
            len = std::max(len, choices[i].second[pick[i]].size());
        std::vector<BigInt> inv(len, 1);
        for (size_t i = 0; i < choices.size(); ++i) {
            const auto& part = choices[i].second[pick[i]];
            for (size_t k = 0; k < part.size(); ++k) {
                BigInt pw = 1;
                for (int t = 0; t < part[k]; ++t) pw *= choices[i].first;
                inv[k] *= pw;  // part sorted descending -> inv descending
            }
        }
        std::reverse(inv.begin(), inv.end());  // ascending: d1 | d2 | ... | dk
        out.push_back(MagmaSpec::abelian(inv));
        // next combination
        size_t i = 0;
        for (; i < choices.size(); ++i) {
            if (++pick[i] < choices[i].second.size()) break;
            pick[i] = 0;
        }
        if (i == choices.size()) break;
    }
    return out;
}

}  // namespace sumgraph
