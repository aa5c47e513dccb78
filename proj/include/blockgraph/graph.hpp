#ifndef BLOCKGRAPH_GRAPH_HPP
#define BLOCKGRAPH_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockgraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Strictly ascending list of distinct vertices.
class VertexSet {
public:
    VertexSet() = default;
    // Sorts and deduplicates.
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet singleton(Vertex v) { return VertexSet(std::vector<Vertex>{v}); }

    std::span<const Vertex> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex front() const { return members_.front(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(Vertex v) const;
    bool is_subset_of(const VertexSet& other) const;
    bool is_proper_subset_of(const VertexSet& other) const {
        return size() < other.size() && is_subset_of(other);
    }
    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;

    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

// Simple undirected graph on the vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // All edges {u,v} with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(std::size_t n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Partition of {0,...,n-1} into nonempty blocks, kept in canonical form:
// members ascending, blocks ordered by their minimum.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless the blocks are nonempty, pairwise
    // disjoint and cover {0,...,n-1}.
    static Partition from_blocks(std::size_t n, std::vector<VertexSet> blocks);
    static Partition discrete(std::size_t n);

    std::size_t ground_size() const { return block_index_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    std::span<const VertexSet> blocks() const { return blocks_; }
    std::size_t block_id(Vertex v) const { return block_index_.at(v); }
    // p[v]: the block containing v.
    const VertexSet& block_of(Vertex v) const { return blocks_[block_index_.at(v)]; }
    bool same_block(Vertex u, Vertex v) const { return block_id(u) == block_id(v); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<VertexSet> blocks_;
    std::vector<std::size_t> block_index_;
};

// Throws std::invalid_argument for n == 0, self-loops and out-of-range
// endpoints. Duplicate edges are merged.
Graph make_graph(std::size_t n, std::span<const Edge> edges);
inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// pi_0(G)
Partition connected_components(const Graph& graph);
bool is_connected(const Graph& graph);
// G[v]
VertexSet component_of(const Graph& graph, Vertex v);
// G^(v): same vertex set, every edge at v removed.
Graph vertex_deleted_subgraph(const Graph& graph, Vertex v);

} // namespace blockgraph

#endif
