#include "blockgraph/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blockgraph {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return size() <= other.size() &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet result;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(result.members_));
    return result;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    VertexSet result;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(result.members_));
    return result;
}

std::string VertexSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i != 0) out << ',';
        out << members_[i];
    }
    out << '}';
    return out.str();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

Partition Partition::from_blocks(std::size_t n, std::vector<VertexSet> blocks) {
    Partition p;
    p.block_index_.assign(n, n);
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) {
            if (v >= n) {
                throw std::invalid_argument("partition block " + blocks[i].to_string() +
                                            " has vertex out of range for n=" + std::to_string(n));
            }
            if (p.block_index_[v] != n) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two partition blocks");
            }
            p.block_index_[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (p.block_index_[v] == n) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not covered by the partition");
        }
    }
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::discrete(std::size_t n) {
    std::vector<VertexSet> blocks;
    blocks.reserve(n);
    for (Vertex v = 0; v < n; ++v) blocks.push_back(VertexSet::singleton(v));
    return from_blocks(n, std::move(blocks));
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i != 0) out += ',';
        out += blocks_[i].to_string();
    }
    out += '}';
    return out;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    Graph g;
    g.adjacency_.resize(n);
    for (const auto& [u, v] : edges) {
        const std::string pair = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge " + pair + " has endpoint out of range for n=" + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("edge " + pair + " is a self-loop");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& row : g.adjacency_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        degree_sum += row.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

Partition connected_components(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unseen);
    std::vector<std::vector<Vertex>> members;
    std::vector<Vertex> stack;
    // Roots are visited in ascending order, so blocks come out ordered by minimum.
    for (Vertex root = 0; root < n; ++root) {
        if (label[root] != unseen) continue;
        const std::size_t id = members.size();
        members.emplace_back();
        label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            members[id].push_back(v);
            for (Vertex w : graph.neighbors(v)) {
                if (label[w] == unseen) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<VertexSet> blocks;
    blocks.reserve(members.size());
    for (auto& m : members) blocks.emplace_back(std::move(m));
    return Partition::from_blocks(n, std::move(blocks));
}

bool is_connected(const Graph& graph) {
    return connected_components(graph).block_count() == 1;
}

VertexSet component_of(const Graph& graph, Vertex v) {
    if (v >= graph.vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return connected_components(graph).block_of(v);
}

Graph vertex_deleted_subgraph(const Graph& graph, Vertex v) {
    if (v >= graph.vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<Edge> kept;
    for (const auto& e : graph.edges()) {
        if (e.first != v && e.second != v) kept.push_back(e);
    }
    return make_graph(graph.vertex_count(), kept);
}

} // namespace blockgraph
