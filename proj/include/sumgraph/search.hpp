#pragma once

#include <optional>
#include <vector>

#include "sumgraph/bigint.hpp"
#include "sumgraph/labelling.hpp"

namespace sumgraph {

enum class DomainKind {
    IntRadius,   // labels in [-r, r] over (Z, +)
    NatMax,      // labels in [1, B] over (N, +)
    Mod,         // labels in Z_m
    FiniteMagma, // labels in an explicit finite carrier
};

struct SearchProblem {
    Graph graph;
    DomainKind domain = DomainKind::IntRadius;
    long bound = 1;      // r, B, or m
    MagmaSpec magma;     // FiniteMagma only
    bool relaxed = false;
    bool strong = false;
    // Excludes the value 0 from integral/mod domains. Off by default (the
    // definition allows 0); the published count tables for n >= 4 follow the
    // zero-free convention, so corpus counting exposes it as a mode.
    bool forbid_zero = false;
};

struct SearchOutcome {
    bool found = false;
    std::optional<Labelling> witness;   // always passes verify when found
    long long nodes_expanded = 0;
    long bound = 0;                     // echoed from the problem
    bool aborted = false;               // node budget hit; outcome inconclusive
};

struct SolveOptions {
    bool prune = true;           // propagation on/off; outcomes never differ
    long long node_budget = -1;  // < 0: unlimited
};

// Complete within the bound: found <=> a labelling exists inside the domain.
// Deterministic for a fixed problem. Exhaustion is a value, not an error.
SearchOutcome solve(const SearchProblem& p, const SolveOptions& opts = {});

struct RadiusResult {
    bool above_cap = false;
    long value = 0;
    std::optional<Labelling> witness;
    long long nodes_expanded = 0;
};

// Least r <= cap admitting an integral labelling, by iterative deepening.
RadiusResult radius(const Graph& g, long cap);

struct SumNumberResult {
    bool above_cap = false;
    long k = 0;
    std::optional<Labelling> witness;  // labelling of G + k isolated vertices
};

// Least k <= max_isolated with G u kK_1 labellable over [1, B].
SumNumberResult sum_number_bounded(const Graph& g, long max_isolated, long label_max);

struct ModSweepResult {
    bool found = false;
    long modulus = 0;
    std::optional<Labelling> witness;
    BigInt conclusive_bound;  // N = 2 * 3^(n-1): sweeping past N settles mod-sum-ness
};

// Ascending sweep m = 2..m_cap; stops at the first modulus that works.
ModSweepResult mod_sum_sweep(const Graph& g, long m_cap);

// Divides every label and the modulus by d = gcd of the labels (no-op for
// d <= 1). Errors: GcdDoesNotDivideModulus.
Labelling gcd_reduce_mod_labelling(const Labelling& lab);

enum class CountMode { Isg, Risg, Both };

struct CorpusCount {
    int n = 0;
    long total = 0;
    long isg = -1;   // -1: not computed in this mode
    long risg = -1;
    long bound = 0;
    bool zero_free = false;
};

// Bounded existence counts over a corpus of same-order graphs. Rising-radius
// ladder per graph up to per_graph_bound; deterministic regardless of worker
// count. Errors: MixedOrders.
CorpusCount count_corpus(const std::vector<Graph>& graphs, long per_graph_bound,
                         int jobs = 1, CountMode mode = CountMode::Both,
                         bool forbid_zero = false);

}  // namespace sumgraph
