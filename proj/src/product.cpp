#include "sumgraph/product.hpp"

namespace sumgraph {

Graph direct_product(const Graph& g, const Graph& h) {
    int ng = g.n(), nh = h.n();
    Graph out(ng * nh);
    for (auto [g1, g2] : g.edges())
        for (auto [h1, h2] : h.edges()) {
            out.set_edge(g1 * nh + h1, g2 * nh + h2);
            out.set_edge(g1 * nh + h2, g2 * nh + h1);
        }
    return out;
}

std::vector<BigInt> flatten(const std::vector<std::vector<BigInt>>& tuples, const FlattenSpec& spec) {
    std::vector<BigInt> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != spec.arity)
            throw Error("InvalidParameter", "tuple arity mismatch");
        BigInt acc = 0, pow = 1;
        for (const auto& x : t) {
            BigInt twice_abs = 2 * (x < 0 ? -x : x);
            if (twice_abs >= spec.base)
                throw Error("BaseTooSmall",
                            "coordinate " + x.str() + " needs base > " + twice_abs.str());
            acc += x * pow;
            pow *= spec.base;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Labelling product_labelling(const Graph& g, const Labelling& lab_g,
                            const Graph& h, const Labelling& lab_h) {
    if (lab_g.spec.kind != MagmaKind::IntAdd || lab_h.spec.kind != MagmaKind::IntAdd)
        throw Error("DomainMismatch", "product labelling works over (Z, +)");
    if (!verify(lab_g, g).ok || !verify(lab_h, h).ok)
        throw Error("NotAValidLabelling", "inputs must verify against their graphs");
    if (!is_strong(lab_g) || !is_strong(lab_h))
        throw Error("NotStrong",
                    "a non-strong factor breaks the product: if 2u is a label of G, the product "
                    "vertices (u,v) and (u,w) get adjacent sums without being adjacent");
    // pair coordinatewise, then flatten with M = 3c+1: label sums have
    // coordinates up to 2c and must not collide with labels modulo M
    BigInt c = 0;
    for (const auto& e : lab_g.labels) c = std::max(c, e.num() < 0 ? -e.num() : e.num());
    for (const auto& e : lab_h.labels) c = std::max(c, e.num() < 0 ? -e.num() : e.num());
    BigInt base = 3 * c + 1;
    std::vector<std::vector<BigInt>> tuples;
    for (int i = 0; i < lab_g.size(); ++i)
        for (int j = 0; j < lab_h.size(); ++j)
            tuples.push_back({lab_g.labels[i].num(), lab_h.labels[j].num()});
    std::vector<BigInt> flat = flatten(tuples, FlattenSpec(2, base));
    Labelling out{MagmaSpec::int_add(), {}, false};
    for (auto& x : flat) out.labels.emplace_back(std::move(x));
    return out;
}

}  // namespace sumgraph
