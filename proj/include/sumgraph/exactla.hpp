#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumgraph/bigint.hpp"
#include "sumgraph/labelling.hpp"

namespace sumgraph {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Exact determinant via fraction-free (Bareiss) elimination. Errors: NotSquare.
BigInt determinant(const IntMatrix& m);

// Basis of the rational kernel, one primitive integer vector per free column
// (coprime entries, positive leading nonzero entry). dimension = cols - rank.
std::vector<std::vector<BigInt>> rational_nullspace(const IntMatrix& m);

// Exact coordinates of v in the given (independent) basis, or nullopt when v
// is outside the span.
std::optional<std::vector<Rational>> coords_in_basis(const std::vector<std::vector<BigInt>>& basis,
                                                     const std::vector<BigInt>& v);

/**
 * The edge-equation system of a valid integral labelling: one row
 * x_i + x_j - x_k = 0 per edge {i,j}, where k is the unique vertex whose
 * label equals label_i + label_j.
 */
struct LabellingSystem {
    Graph graph;
    Labelling labelling;
    std::vector<std::array<int, 3>> rows;  // (i, j, k)
    IntMatrix matrix;
};

struct KernelResult {
    LabellingSystem system;
    std::vector<std::vector<BigInt>> basis;
};

// Pre: verify(lab, g).ok and labels distinct. Errors: NotAValidLabelling.
KernelResult labelling_kernel(const Graph& g, const Labelling& lab);

// Scans integer coefficient vectors with entries in [-box, box] over the
// basis; keeps vectors that verify against g, have coprime entries, and are
// pairwise non-proportional. Deterministic order; the scan stops after
// max_results hits (the full box-50 set on the 4D-cube runs to the hundreds
// of thousands).
std::vector<Labelling> enumerate_primitive_labellings(const Graph& g,
                                                      const std::vector<std::vector<BigInt>>& basis,
                                                      long box, long max_results = 1000);

// Membership test for the set the scan enumerates: v is an integer
// combination of the basis with coefficients in [-box, box], primitive,
// pairwise-distinct entries, and verifies against g.
bool in_primitive_box(const Graph& g, const std::vector<std::vector<BigInt>>& basis, long box,
                      const std::vector<BigInt>& v);

struct RandomCycleHit {
    BigInt prime;
    Labelling labelling;      // over ModAdd prime, cyclic vertex order
    std::vector<int> g;       // the sampled position map
    BigInt det;
};

struct RandomCycleResult {
    std::vector<RandomCycleHit> hits;
    long iterations = 0;
    std::vector<std::string> warnings;  // unfactored cofactors etc.
};

// Randomized prime-field search for C_n labellings: samples maps g with
// g(i) not in {i, i+1} and g(i) != g(i+1) (indices mod n), builds the system
// x_i + x_{i+1} = x_{g(i)}, factors its determinant, and keeps every prime
// field kernel vector that verifies as C_n. Reproducible for a fixed seed.
// Errors: NoSolutionWithinBudget when the iteration cap passes with no hit.
RandomCycleResult random_cycle_search(int n, uint64_t seed, long prime_bound,
                                      long max_iterations = 300000);

}  // namespace sumgraph
