#ifndef BLOCKGRAPH_BLOCK_CLOSURE_HPP
#define BLOCKGRAPH_BLOCK_CLOSURE_HPP

#include <vector>

#include "blockgraph/graph.hpp"

namespace blockgraph {

// Blocks are the vertex sets of maximal 2-connected subgraphs, bridges
// (two endpoints) and isolated vertices (singletons), ordered by minimum.
// Every edge lies in exactly one block; two blocks share at most one
// vertex, which is then a cut vertex.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

BlockDecomposition biconnected_blocks(const Graph& graph);

// [G]: every block completed to a clique. The result is the smallest block
// graph on the same vertex set containing G.
Graph block_closure(const Graph& graph);

bool is_block_graph(const Graph& graph);

// Throws std::invalid_argument when the vertex counts differ.
bool block_equivalent(const Graph& g, const Graph& h);

} // namespace blockgraph

#endif
