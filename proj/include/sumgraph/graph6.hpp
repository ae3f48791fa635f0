#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sumgraph/graph.hpp"

namespace sumgraph {

// graph6 codec, bit-exact per the published format. The header is one byte
// n+63 for n <= 62, or '~' followed by three bytes (18 bits, 6 per byte) for
// larger n; the body packs the upper triangle of the adjacency matrix in
// column order, 6 bits per byte, every byte offset by 63.
//
// Errors: MalformedHeader, TruncatedBody, TrailingBits (nonzero padding),
// Unsupported (n above the 2^16 ceiling).

constexpr int kGraph6Ceiling = 1 << 16;

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// One graph per line; blank lines are skipped, an optional ">>graph6<<"
// prelude is tolerated.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace sumgraph
