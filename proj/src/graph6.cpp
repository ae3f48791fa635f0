#include "sumgraph/graph6.hpp"

#include <fstream>
#include <istream>

#include "sumgraph/error.hpp"

namespace sumgraph {

namespace {

constexpr int kBias = 63;

bool valid_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (text.size() < pos + k) throw Error("TruncatedBody", "graph6 input ends inside header/body");
    };
    need(1);
    unsigned char c0 = static_cast<unsigned char>(text[pos]);
    if (!valid_byte(c0)) throw Error("MalformedHeader", "graph6 byte out of range");
    long n;
    if (c0 == 126) {
        // extended form: '~' + 3 bytes, 18 bits big-endian
        need(2);
        if (static_cast<unsigned char>(text[pos + 1]) == 126)
            throw Error("Unsupported", "8-byte graph6 headers exceed the supported ceiling");
        need(4);
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            unsigned char c = static_cast<unsigned char>(text[pos + k]);
            if (!valid_byte(c)) throw Error("MalformedHeader", "graph6 size byte out of range");
            n = (n << 6) | (c - kBias);
        }
        pos += 4;
        if (n > kGraph6Ceiling) throw Error("Unsupported", "graph6 order above ceiling: " + std::to_string(n));
    } else {
        n = c0 - kBias;
        pos += 1;
    }
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    need(static_cast<size_t>(nbytes));
    long bit = 0;
    for (long byte = 0; byte < nbytes; ++byte) {
        unsigned char c = static_cast<unsigned char>(text[pos + byte]);
        if (!valid_byte(c)) throw Error("TruncatedBody", "graph6 body byte out of range");
        int v = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (v >> k) & 1;
            if (bit >= nbits) {
                if (b) throw Error("TrailingBits", "nonzero padding in final graph6 byte");
                continue;
            }
            if (b) {
                // column order: bit index -> pair (i, j), j the column
                long t = bit;
                int j = 1;
                while (t >= j) { t -= j; ++j; }
                g.set_edge(static_cast<int>(t), j);
            }
        }
    }
    pos += static_cast<size_t>(nbytes);
    if (pos != text.size()) throw Error("TrailingBits", "unexpected bytes after graph6 body");
    return g;
}

std::string emit_graph6(const Graph& g) {
    long n = g.n();
    if (n > kGraph6Ceiling) throw Error("Unsupported", "graph too large for graph6 emission");
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + kBias);
        out += static_cast<char>(((n >> 6) & 63) + kBias);
        out += static_cast<char>((n & 63) + kBias);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kBias);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>", 0) == 0) continue;  // format prelude
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace sumgraph
