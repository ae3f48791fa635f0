#pragma once

#include <vector>

#include "sumgraph/graph.hpp"

namespace sumgraph {

// All pairwise non-isomorphic simple graphs on n vertices, as canonical
// representatives (lexicographically minimal graph6 body over all vertex
// permutations). Desk scale only: n <= 7 is practical, n >= 8 is refused.
std::vector<Graph> enumerate_nonisomorphic(int n, int jobs = 1);

// true iff g's upper-triangle bit string (graph6 column order) is minimal
// among all permutations of the vertices.
bool is_canonical_minimal(const Graph& g);

std::vector<Graph> filter_regular(const std::vector<Graph>& graphs, int degree);

}  // namespace sumgraph
