#pragma once

#include <utility>
#include <vector>

#include "sumgraph/graph.hpp"
#include "sumgraph/magma.hpp"

namespace sumgraph {

/**
 * Vertex -> element assignment over a magma. When relaxed is false the
 * labels must be pairwise distinct; relaxed labellings are multisets and
 * membership means membership in the support.
 */
struct Labelling {
    MagmaSpec spec;
    std::vector<Element> labels;
    bool relaxed = false;

    int size() const { return static_cast<int>(labels.size()); }
};

struct SpuriousEdge {
    int u = 0, v = 0;
    Element sum;             // the composed value that lies in the support
    int witness_vertex = -1; // a vertex carrying that value
};

struct Verdict {
    bool ok = true;
    std::vector<std::pair<int, int>> missing_edges;
    std::vector<SpuriousEdge> spurious_edges;
};

// Graph induced on the labelled vertices: u ~ w iff some ordered composition
// of their labels lies in the support. Distinct vertices carrying the same
// label l are adjacent iff l (+) l is in the support. Never any self-loop.
Graph induced_graph(const Labelling& lab);

// Edge-for-edge comparison of induced_graph(lab) against target under the
// identity vertex assignment. Pre: label count = target vertex count.
Verdict verify(const Labelling& lab, const Graph& target);

// true iff no label composed with itself lands in the support
bool is_strong(const Labelling& lab);

// Sum-graph isomorphism check (Def. 2 style): for every ordered label pair
// whose composition lies in the source support, the image of the composition
// must equal the composition of the images; additionally f must carry the
// induced edge set onto the other induced edge set. f maps vertex indices.
// Errors: NotBijective.
bool check_sum_iso(const Labelling& lab_v, const Labelling& lab_w, const std::vector<int>& f);

// The two-element-image construction showing every graph is an M-graph:
// carrier = V + {bullet}, a (+) b = v0 on edges, bullet otherwise. The
// returned identity labelling of g always verifies.
std::pair<MagmaSpec, Labelling> universal_magma(const Graph& g);

// Throws DistinctnessViolated / DomainMismatch when the labelling breaks its
// own invariants; verify/induced_graph call this first.
void validate_labelling(const Labelling& lab);

}  // namespace sumgraph
