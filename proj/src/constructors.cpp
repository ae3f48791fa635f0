#include "sumgraph/constructors.hpp"

#include "sumgraph/error.hpp"

namespace sumgraph {

Labelling harary_path(int n) {
    if (n < 4) throw Error("TooSmall", "harary path labelling needs n >= 4");
    Labelling lab{MagmaSpec::int_add(), {}, false};
    BigInt a = 1, b = 2;
    lab.labels.emplace_back(a);
    lab.labels.emplace_back(b);
    for (int k = 2; k < n; ++k) {
        BigInt next = a - b;  // a_k = a_{k-2} - a_{k-1}
        lab.labels.emplace_back(next);
        a = b;
        b = next;
    }
    return lab;
}

Labelling matching_harary_style(int m) {
    if (m < 4) throw Error("TooSmall", "harary-style matching labelling needs m >= 4");
    long a = 2L * m - 2, b = m - 1;
    Labelling lab{MagmaSpec::int_add(), {}, false};
    for (int i = 0; i + 1 < m; ++i) {
        lab.labels.emplace_back(BigInt(a + i));
        lab.labels.emplace_back(BigInt(-b - i));
    }
    lab.labels.emplace_back(BigInt(a - b));          // m-1
    lab.labels.emplace_back(BigInt(b + (m - 2)));    // 2m-3
    return lab;
}

Labelling matching_li(int m) {
    if (m < 3) throw Error("TooSmall", "li matching labelling needs m >= 3");
    Labelling lab{MagmaSpec::int_add(), {}, false};
    lab.labels.emplace_back(BigInt(-1));
    lab.labels.emplace_back(BigInt(4L * m - 4));
    for (int i = 1; i < m; ++i) {
        long odd = 2L * i - 1;
        lab.labels.emplace_back(BigInt(odd));
        lab.labels.emplace_back(BigInt(4L * m - 4 - odd));
    }
    return lab;
}

Labelling empty_graph(int n) {
    if (n < 1) throw Error("InvalidParameter", "empty graph labelling needs n >= 1");
    Labelling lab{MagmaSpec::int_add(), {}, false};
    if (n == 1) {
        lab.labels.emplace_back(BigInt(0));
        return lab;
    }
    for (long v = -(n - 1); v <= -((n + 1) / 2); ++v) lab.labels.emplace_back(BigInt(v));
    for (long v = n / 2; v <= n - 1; ++v) lab.labels.emplace_back(BigInt(v));
    return lab;
}

Labelling empty_graph_even_alt(int n) {
    if (n < 2 || n % 2 != 0)
        throw Error("InvalidParameter", "alternative empty-graph labelling needs even n");
    Labelling lab{MagmaSpec::int_add(), {}, false};
    for (long v = 1; v <= n - 1; v += 2) {
        lab.labels.emplace_back(BigInt(-v));
        lab.labels.emplace_back(BigInt(v));
    }
    return lab;
}

namespace {

Element zero_element(const MagmaSpec& spec) {
    if (spec.kind == MagmaKind::ModAdd) return Element(BigInt(0));
    if (spec.kind == MagmaKind::AbelianProduct)
        return Element(std::vector<BigInt>(spec.moduli.size(), 0));
    throw Error("DomainMismatch", "zero needs an additive finite kind");
}

Element scale(const MagmaSpec& spec, const BigInt& k, const Element& a) {
    // k-fold sum in an additive finite abelian kind, by double-and-add
    Element acc = zero_element(spec);
    BigInt left = k;
    Element step = a;
    bool neg = left < 0;
    if (neg) left = -left;
    while (left > 0) {
        if ((left & 1) != 0) acc = op(spec, acc, step);
        step = op(spec, step, step);
        left >>= 1;
    }
    if (neg) {
        // negate: m - x componentwise
        if (spec.kind == MagmaKind::ModAdd) {
            BigInt x = acc.num();
            acc = Element(x == 0 ? BigInt(0) : spec.modulus - x);
        } else {
            std::vector<BigInt> t = acc.tuple();
            for (size_t i = 0; i < t.size(); ++i)
                if (t[i] != 0) t[i] = spec.moduli[i] - t[i];
            acc = Element(std::move(t));
        }
    }
    return acc;
}

bool is_zero_element(const MagmaSpec& spec, const Element& e) {
    if (spec.kind == MagmaKind::ModAdd) return e.num() == 0;
    if (spec.kind == MagmaKind::AbelianProduct) {
        for (const auto& x : e.tuple())
            if (x != 0) return false;
        return true;
    }
    throw Error("DomainMismatch", "zero test needs an additive finite kind");
}

}  // namespace

Labelling c4_over_abelian(const MagmaSpec& spec, const Element& a) {
    require_valid(spec, a);
    if (is_zero_element(spec, a)) throw Error("InvalidGenerator", "a must be nonzero");
    if (!is_zero_element(spec, scale(spec, 5, a)))
        throw Error("InvalidGenerator", "5a must vanish in the group");
    Labelling lab{spec, {}, false};
    lab.labels.push_back(a);
    lab.labels.push_back(scale(spec, 3, a));
    lab.labels.push_back(scale(spec, 4, a));
    lab.labels.push_back(scale(spec, 2, a));
    return lab;
}

FibCycleResult fibonacci_cycle(const MagmaSpec& spec, const Element& a0, const Element& a1, int n) {
    if (n < 3) throw Error("InvalidParameter", "fibonacci cycle needs n >= 3");
    if (spec.kind != MagmaKind::ModAdd && spec.kind != MagmaKind::AbelianProduct)
        throw Error("DomainMismatch", "fibonacci cycle needs a finite abelian kind");
    require_valid(spec, a0);
    require_valid(spec, a1);
    FibCycleResult res;
    res.params = fib_params(n);
    // necessary conditions: delta * a0 = 0 (order of a0 divides delta) and d*a1 = z*a0
    if (!is_zero_element(spec, scale(spec, res.params.delta, a0))) {
        res.conditions_ok = false;
        res.condition_note = "order of a0 does not divide delta(n)";
    } else if (!(scale(spec, res.params.d, a1) == scale(spec, res.params.z, a0))) {
        res.conditions_ok = false;
        res.condition_note = "d*a1 != z*a0";
    }
    Labelling lab{spec, {a0, a1}, false};
    Element prev = a0, cur = a1;
    for (int i = 2; i < n; ++i) {
        Element next = op(spec, prev, cur);
        lab.labels.push_back(next);
        prev = cur;
        cur = next;
    }
    res.labelling = std::move(lab);
    return res;
}

Labelling c4l_theorem_labelling(int l) {
    if (l < 1) throw Error("InvalidParameter", "need l >= 1");
    BigInt f = fib(2L * l);
    if (f == 1) throw Error("DegenerateGroup", "f_2 = 1: Z_1 x Z_1 cannot carry distinct labels");
    MagmaSpec spec = MagmaSpec::abelian({f, f});
    Labelling lab{spec, {}, false};
    for (int i = 0; i < 4 * l; ++i) {
        BigInt fi = fib(i) % f;
        BigInt fim1 = fib(i - 1) % f;  // f_{-1} = 1
        lab.labels.emplace_back(std::vector<BigInt>{fi, fim1});
    }
    return lab;
}

Labelling union_cycle(int k) {
    if (k < 2) throw Error("TooSmall", "union cycle needs k >= 2");
    MagmaSpec spec = MagmaSpec::set_magma(2 * k, SetOp::Union);
    Labelling lab{spec, {}, false};
    for (int i = 1; i <= k; ++i) {
        uint64_t A = uint64_t{1} << (i - 1);
        uint64_t A_next = uint64_t{1} << (i % k);  // A_{k+1} = A_1
        uint64_t B = uint64_t{1} << (k + i - 1);
        lab.labels.push_back(Element::subset(A));
        lab.labels.push_back(Element::subset(A | A_next | B));
    }
    return lab;
}

Labelling union_clique(int n, int s) {
    if (n < 1) throw Error("InvalidParameter", "clique size must be >= 1");
    if (n > s + 1) throw Error("UniverseTooSmall", "chain of " + std::to_string(n) +
                                                       " sets needs a universe of size >= " +
                                                       std::to_string(n - 1));
    MagmaSpec spec = MagmaSpec::set_magma(s, SetOp::Union);
    Labelling lab{spec, {}, false};
    for (int i = 0; i < n; ++i) lab.labels.push_back(Element::subset((uint64_t{1} << i) - 1));
    return lab;
}

Labelling boolean_clique(long m) {
    if (m < 1) throw Error("NotRepresentable", "clique size must be >= 1");
    int k = 0;
    while ((1L << k) < m) ++k;
    bool full = (1L << k) == m;
    bool punctured = (1L << k) == m + 1;
    if (!full && !punctured)
        throw Error("NotRepresentable", "K_m over symmetric difference needs m = 2^k or 2^k - 1");
    MagmaSpec spec = MagmaSpec::set_magma(k, SetOp::SymDiff);
    Labelling lab{spec, {}, false};
    for (uint64_t x = full ? 0 : 1; x < (uint64_t{1} << k); ++x)
        lab.labels.push_back(Element::subset(x));
    return lab;
}

Labelling relaxed_clique(int n) {
    if (n < 1) throw Error("InvalidParameter", "clique size must be >= 1");
    Labelling lab{MagmaSpec::int_add(), {}, true};
    for (int i = 0; i < n; ++i) lab.labels.emplace_back(BigInt(0));
    return lab;
}

}  // namespace sumgraph
