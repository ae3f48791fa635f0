#include "sumgraph/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>

#include "sumgraph/error.hpp"

namespace sumgraph {

namespace {

// adjacency as per-vertex bitmasks, upper-triangle bits in graph6 column order
struct SmallGraph {
    int n;
    uint32_t adj[8];
};

struct PairTable {
    int n;
    int count;
    int ai[32], aj[32];
    explicit PairTable(int n_) : n(n_), count(0) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                ai[count] = i;
                aj[count] = j;
                ++count;
            }
    }
};

SmallGraph from_mask(int n, uint32_t mask, const PairTable& pt) {
    SmallGraph g{n, {0, 0, 0, 0, 0, 0, 0, 0}};
    for (int b = 0; b < pt.count; ++b)
        if (mask >> b & 1) {
            g.adj[pt.ai[b]] |= 1u << pt.aj[b];
            g.adj[pt.aj[b]] |= 1u << pt.ai[b];
        }
    return g;
}

// Compares columns of the permuted graph against the original mask,
// extending the partial permutation one vertex at a time. Returns true if
// some permutation yields a strictly smaller bit string.
bool smaller_permutation_exists(const SmallGraph& g, uint32_t mask) {
    int n = g.n;
    int perm[8];
    bool used[8] = {false};
    // column bit offsets: column j starts at j*(j-1)/2
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == n) return false;  // complete tie: an automorphism
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            // compute column `depth` bits under perm + cand, compare with original
            int base = depth * (depth - 1) / 2;
            int cmp = 0;  // -1 smaller, 0 tie, +1 greater
            for (int i = 0; i < depth; ++i) {
                int newbit = (g.adj[perm[i]] >> cand) & 1;
                int oldbit = (mask >> (base + i)) & 1;
                if (newbit != oldbit) {
                    cmp = newbit < oldbit ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0) return true;
            if (cmp > 0) continue;
            perm[depth] = cand;
            used[cand] = true;
            bool found = rec(depth + 1);
            used[cand] = false;
            if (found) return true;
        }
        return false;
    };
    return rec(0);
}

Graph to_graph(int n, uint32_t mask, const PairTable& pt) {
    Graph g(n);
    for (int b = 0; b < pt.count; ++b)
        if (mask >> b & 1) g.set_edge(pt.ai[b], pt.aj[b]);
    return g;
}

}  // namespace

bool is_canonical_minimal(const Graph& g) {
    int n = g.n();
    if (n > 8) throw Error("InvalidParameter", "canonicity check supports n <= 8");
    PairTable pt(n);
    uint32_t mask = 0;
    for (int b = 0; b < pt.count; ++b)
        if (g.edge(pt.ai[b], pt.aj[b])) mask |= 1u << b;
    return !smaller_permutation_exists(from_mask(n, mask, pt), mask);
}

std::vector<Graph> enumerate_nonisomorphic(int n, int jobs) {
    if (n < 0 || n > 7)
        throw Error("InvalidParameter",
                    "non-isomorphic enumeration is desk scale only (n <= 7), got " + std::to_string(n));
    if (n <= 1) return {Graph(n)};
    PairTable pt(n);
    uint64_t total = uint64_t{1} << pt.count;
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<uint32_t>> hits(jobs);
    auto worker = [&](int w) {
        PairTable local(n);
        for (uint64_t mask = w; mask < total; mask += jobs) {
            SmallGraph sg = from_mask(n, static_cast<uint32_t>(mask), local);
            if (!smaller_permutation_exists(sg, static_cast<uint32_t>(mask)))
                hits[w].push_back(static_cast<uint32_t>(mask));
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    std::vector<uint32_t> masks;
    for (auto& h : hits) masks.insert(masks.end(), h.begin(), h.end());
    std::sort(masks.begin(), masks.end());
    std::vector<Graph> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) out.push_back(to_graph(n, m, pt));
    return out;
}

std::vector<Graph> filter_regular(const std::vector<Graph>& graphs, int degree) {
    std::vector<Graph> out;
    for (const auto& g : graphs) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v) ok = g.degree(v) == degree;
        if (ok) out.push_back(g);
    }
    return out;
}

}  // namespace sumgraph
