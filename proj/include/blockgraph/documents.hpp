#ifndef BLOCKGRAPH_DOCUMENTS_HPP
#define BLOCKGRAPH_DOCUMENTS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blockgraph/graph.hpp"
#include "blockgraph/partition_family.hpp"

namespace blockgraph {

class ParseError : public std::runtime_error {
public:
    // line is 1-based; 0 when the error has no single source line.
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge list: "n m", then m lines "u v" with 0 <= u < v < n. Lines starting
// with '#' and blank lines are skipped. Edge order in the input is free.
Graph parse_edge_list(std::string_view text);
// Canonical form: edges sorted lexicographically, '\n' after every line.
std::string write_edge_list(const Graph& graph);

// JSON object {"n": <count>, "parts": [[[block], ...], ...]} with one
// partition per vertex. Blocks and members may appear in any order.
PartitionFamily parse_family_document(std::string_view text);
// Canonical form, one partition per line.
std::string write_family_document(const PartitionFamily& family);

// Graphviz DOT, nodes 0..n-1 in order. With highlight_blocks every block
// gets its own color and cut vertices are drawn as double circles.
std::string write_dot(const Graph& graph, bool highlight_blocks);

} // namespace blockgraph

#endif
