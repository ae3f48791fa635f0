#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sumgraph {

/**
 * Simple undirected graph on vertices 0..n-1. Adjacency is stored as packed
 * bit rows so edge-set comparisons during corpus scans stay cheap.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int n() const { return n_; }

    bool edge(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set_edge(int i, int j, bool on = true) {
        if (i == j) return;  // simple graphs: no loops
        set_bit(i, j, on);
        set_bit(j, i, on);
    }

    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
    int row_words() const { return words_; }

    int degree(int i) const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void set_bit(int i, int j, bool on) {
        uint64_t& w = bits_[static_cast<size_t>(i) * words_ + j / 64];
        if (on) w |= (uint64_t{1} << (j % 64));
        else w &= ~(uint64_t{1} << (j % 64));
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

struct FamilySpec {
    enum class Kind {
        Cycle, Path, Complete, EmptyGraph, CompleteBipartite, Matching,
        Hypercube, Petersen, TriangularPrism, DisjointUnion
    };
    Kind kind = Kind::EmptyGraph;
    int a = 0, b = 0;                 // primary / secondary size parameters
    std::vector<FamilySpec> parts;    // DisjointUnion blocks

    static FamilySpec cycle(int n) { return {Kind::Cycle, n, 0, {}}; }
    static FamilySpec path(int n) { return {Kind::Path, n, 0, {}}; }
    static FamilySpec complete(int n) { return {Kind::Complete, n, 0, {}}; }
    static FamilySpec empty(int n) { return {Kind::EmptyGraph, n, 0, {}}; }
    static FamilySpec complete_bipartite(int m, int n) { return {Kind::CompleteBipartite, m, n, {}}; }
    static FamilySpec matching(int m) { return {Kind::Matching, m, 0, {}}; }
    static FamilySpec hypercube(int k) { return {Kind::Hypercube, k, 0, {}}; }
    static FamilySpec petersen() { return {Kind::Petersen, 0, 0, {}}; }
    static FamilySpec prism() { return {Kind::TriangularPrism, 0, 0, {}}; }
    static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
        FamilySpec f{Kind::DisjointUnion, 0, 0, std::move(parts)};
        return f;
    }
};

// Errors: InvalidParameter for out-of-range family parameters.
Graph build_family(const FamilySpec& spec);

// Parses compact family names as used by the CLI: "C4", "P6", "K5", "K3,3",
// "Q4", "4P2", "petersen", "prism", and '+'-joined unions like "C4+3K1".
FamilySpec parse_family_spec(const std::string& text);
std::string family_name(const FamilySpec& spec);

bool is_connected(const Graph& g);
bool has_odd_cycle(const Graph& g);

}  // namespace sumgraph
