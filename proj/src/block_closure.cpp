#include "blockgraph/block_closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blockgraph {

namespace {

struct Frame {
    Vertex vertex;
    std::size_t next_neighbor;
};

} // namespace

// Hopcroft-Tarjan lowpoint decomposition with an explicit DFS stack.
BlockDecomposition biconnected_blocks(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> discovery(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<Vertex> parent(n, n);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> edge_stack;
    std::vector<Frame> dfs;
    BlockDecomposition result;
    std::size_t clock = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (discovery[root] != unvisited) continue;
        if (graph.degree(root) == 0) {
            discovery[root] = clock++;
            result.blocks.push_back(VertexSet::singleton(root));
            continue;
        }
        std::size_t root_children = 0;
        discovery[root] = low[root] = clock++;
        dfs.push_back({root, 0});
        while (!dfs.empty()) {
            Frame& top = dfs.back();
            const Vertex v = top.vertex;
            const auto neighbors = graph.neighbors(v);
            if (top.next_neighbor < neighbors.size()) {
                const Vertex w = neighbors[top.next_neighbor++];
                if (discovery[w] == unvisited) {
                    parent[w] = v;
                    discovery[w] = low[w] = clock++;
                    edge_stack.emplace_back(v, w);
                    if (v == root) ++root_children;
                    dfs.push_back({w, 0});
                } else if (w != parent[v] && discovery[w] < discovery[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], discovery[w]);
                }
                continue;
            }
            dfs.pop_back();
            if (dfs.empty()) break;
            const Vertex p = dfs.back().vertex;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= discovery[p]) {
                if (p != root) is_cut[p] = true;
                std::vector<Vertex> members;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    members.push_back(e.first);
                    members.push_back(e.second);
                    if (e == Edge{p, v}) break;
                }
                result.blocks.emplace_back(std::move(members));
            }
        }
        if (root_children > 1) is_cut[root] = true;
    }

    std::sort(result.blocks.begin(), result.blocks.end());
    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) cuts.push_back(v);
    }
    result.cut_vertices = VertexSet(std::move(cuts));
    return result;
}

Graph block_closure(const Graph& graph) {
    std::vector<Edge> edges;
    for (const auto& block : biconnected_blocks(graph).blocks) {
        const auto members = block.members();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                edges.emplace_back(members[i], members[j]);
            }
        }
    }
    return make_graph(graph.vertex_count(), edges);
}

bool is_block_graph(const Graph& graph) {
    for (const auto& block : biconnected_blocks(graph).blocks) {
        const auto members = block.members();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!graph.has_edge(members[i], members[j])) return false;
            }
        }
    }
    return true;
}

bool block_equivalent(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) {
        throw std::invalid_argument("block_equivalent: vertex counts differ (" + std::to_string(g.vertex_count()) +
                                    " vs " + std::to_string(h.vertex_count()) + ")");
    }
    return block_closure(g) == block_closure(h);
}

} // namespace blockgraph
