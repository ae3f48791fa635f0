#include "sumgraph/graph.hpp"

#include <bit>
#include <cctype>
#include <queue>
#include <sstream>

#include "sumgraph/error.hpp"

namespace sumgraph {

int Graph::degree(int i) const {
    int d = 0;
    const uint64_t* r = row(i);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

Graph cycle(int n) {
    if (n < 3) throw Error("InvalidParameter", "cycle needs n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw Error("InvalidParameter", "path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw Error("InvalidParameter", "complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error("InvalidParameter", "complete bipartite needs both sides >= 1");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.set_edge(i, m + j);
    return g;
}

Graph matching(int m) {
    if (m < 1) throw Error("InvalidParameter", "matching needs m >= 1");
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) g.set_edge(2 * i, 2 * i + 1);
    return g;
}

Graph hypercube(int k) {
    if (k < 0 || k > 20) throw Error("InvalidParameter", "hypercube dimension out of range");
    int n = 1 << k;
    Graph g(n);
    // vertex i adjacent to j iff the binary indices differ in exactly one digit
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < k; ++b)
            if (!(i >> b & 1)) g.set_edge(i, i | (1 << b));
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.set_edge(i, (i + 1) % 5);          // outer pentagon
        g.set_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.set_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.set_edge(i, (i + 1) % 3);
        g.set_edge(3 + i, 3 + (i + 1) % 3);
        g.set_edge(i, 3 + i);
    }
    return g;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Cycle: return cycle(spec.a);
        case K::Path: return path(spec.a);
        case K::Complete: return complete(spec.a);
        case K::EmptyGraph:
            if (spec.a < 0) throw Error("InvalidParameter", "empty graph needs n >= 0");
            return Graph(spec.a);
        case K::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case K::Matching: return matching(spec.a);
        case K::Hypercube: return hypercube(spec.a);
        case K::Petersen: return petersen();
        case K::TriangularPrism: return prism();
        case K::DisjointUnion: {
            std::vector<Graph> blocks;
            int total = 0;
            for (const auto& part : spec.parts) {
                blocks.push_back(build_family(part));
                total += blocks.back().n();
            }
            Graph g(total);
            int off = 0;
            for (const auto& b : blocks) {
                for (auto [i, j] : b.edges()) g.set_edge(off + i, off + j);
                off += b.n();
            }
            return g;
        }
    }
    throw Error("InvalidParameter", "unknown family kind");
}

namespace {

FamilySpec parse_single_family(const std::string& t) {
    if (t.empty()) throw Error("InvalidParameter", "empty family name");
    std::string low;
    for (char c : t) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "petersen") return FamilySpec::petersen();
    if (low == "prism") return FamilySpec::prism();
    char head = t[0];
    std::string rest = t.substr(1);
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw Error("InvalidParameter", "missing size in family name '" + t + "'");
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("InvalidParameter", "bad family name '" + t + "'");
        return std::stoi(s);
    };
    switch (std::toupper(static_cast<unsigned char>(head))) {
        case 'C': return FamilySpec::cycle(parse_int(rest));
        case 'P': return FamilySpec::path(parse_int(rest));
        case 'Q': return FamilySpec::hypercube(parse_int(rest));
        case 'K': {
            auto comma = rest.find(',');
            if (comma != std::string::npos)
                return FamilySpec::complete_bipartite(parse_int(rest.substr(0, comma)),
                                                      parse_int(rest.substr(comma + 1)));
            return FamilySpec::complete(parse_int(rest));
        }
        default: throw Error("InvalidParameter", "unknown family '" + t + "'");
    }
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::vector<FamilySpec> parts;
    std::string term;
    std::stringstream ss(text);
    while (std::getline(ss, term, '+')) {
        // strip blanks
        std::string t;
        for (char c : term)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        // optional leading multiplier: 3K1, 4P2
        size_t p = 0;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
        int mult = 1;
        std::string name = t;
        if (p > 0 && p < t.size()) {
            mult = std::stoi(t.substr(0, p));
            name = t.substr(p);
        }
        FamilySpec f = parse_single_family(name);
        // mP2 is the standard matching notation
        if (mult > 1 && f.kind == FamilySpec::Kind::Path && f.a == 2) {
            parts.push_back(FamilySpec::matching(mult));
            continue;
        }
        if (mult > 1 && f.kind == FamilySpec::Kind::Complete && f.a == 1) {
            parts.push_back(FamilySpec::empty(mult));
            continue;
        }
        for (int i = 0; i < mult; ++i) parts.push_back(f);
    }
    if (parts.empty()) throw Error("InvalidParameter", "no family in '" + text + "'");
    if (parts.size() == 1) return parts[0];
    return FamilySpec::disjoint_union(std::move(parts));
}

std::string family_name(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Cycle: return "C" + std::to_string(spec.a);
        case K::Path: return "P" + std::to_string(spec.a);
        case K::Complete: return "K" + std::to_string(spec.a);
        case K::EmptyGraph: return std::to_string(spec.a) + "K1";
        case K::CompleteBipartite: return "K" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case K::Matching: return std::to_string(spec.a) + "P2";
        case K::Hypercube: return "Q" + std::to_string(spec.a);
        case K::Petersen: return "petersen";
        case K::TriangularPrism: return "prism";
        case K::DisjointUnion: {
            std::string out;
            for (const auto& p : spec.parts) {
                if (!out.empty()) out += "+";
                out += family_name(p);
            }
            return out;
        }
    }
    return "?";
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < g.n(); ++u)
            if (g.edge(v, u) && !seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == g.n();
}

bool has_odd_cycle(const Graph& g) {
    // odd cycle <=> some component is non-bipartite
    std::vector<int> colour(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < g.n(); ++u) {
                if (!g.edge(v, u)) continue;
                if (colour[u] == -1) {
                    colour[u] = colour[v] ^ 1;
                    q.push(u);
                } else if (colour[u] == colour[v]) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace sumgraph
