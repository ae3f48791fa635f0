#pragma once

#include <vector>

#include "sumgraph/bigint.hpp"
#include "sumgraph/error.hpp"
#include "sumgraph/labelling.hpp"

namespace sumgraph {

// Direct (tensor) product: (g1,h1) ~ (g2,h2) iff g1~g2 and h1~h2; vertex
// (i,j) gets index i*|H| + j.
Graph direct_product(const Graph& g, const Graph& h);

struct FlattenSpec {
    int arity = 1;
    BigInt base;  // strictly greater than twice the largest |coordinate| in play

    FlattenSpec(int k, BigInt m) : arity(k), base(std::move(m)) {
        if (base < 1) throw Error("InvalidParameter", "base must be >= 1");
    }
};

// (x_1, ..., x_k) -> sum x_i * M^(i-1). Injective on any input set whose
// coordinates satisfy |x| < M/2; additive on pairs whose sums stay within
// the bound. Errors: BaseTooSmall.
std::vector<BigInt> flatten(const std::vector<std::vector<BigInt>>& tuples, const FlattenSpec& spec);

// Coordinatewise pairing of two strong integral labellings, flattened with
// the smallest base that keeps label sums from colliding with labels
// (M = 3c+1 for c the largest |coordinate|). Output verifies against
// direct_product(g, h) and is strong. Errors: NotStrong, NotAValidLabelling.
Labelling product_labelling(const Graph& g, const Labelling& lab_g,
                            const Graph& h, const Labelling& lab_h);

}  // namespace sumgraph
