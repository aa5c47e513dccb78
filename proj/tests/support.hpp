// Shared fixtures and brute-force references for the test binaries. Nothing
// here calls the traversal or decomposition code under test.
#ifndef BLOCKGRAPH_TESTS_SUPPORT_HPP
#define BLOCKGRAPH_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "blockgraph/graph.hpp"
#include "blockgraph/partition_family.hpp"

namespace blockgraph::testing {

inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline Graph path4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph cycle4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph complete4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
// Leaves 0, 1, 2 around center 3.
inline Graph star3() { return make_graph(4, {{0, 3}, {1, 3}, {2, 3}}); }
inline Graph bowtie() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }
inline Graph cycle4_pendant() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}}); }

inline Partition partition(std::size_t n, std::vector<VertexSet> blocks) {
    return Partition::from_blocks(n, std::move(blocks));
}

// Reachability by Warshall closure over the edge list.
inline std::vector<std::vector<bool>> reachability(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; ++v) reach[v][v] = true;
    for (const auto& [u, v] : g.edges()) reach[u][v] = reach[v][u] = true;
    for (Vertex k = 0; k < n; ++k)
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

inline std::size_t brute_component_count(const Graph& g, std::vector<bool> removed = {}) {
    const std::size_t n = g.vertex_count();
    removed.resize(n, false);
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges())
        if (!removed[u] && !removed[v]) kept.emplace_back(u, v);
    const auto reach = reachability(make_graph(n, kept));
    std::size_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[v]) continue;
        bool leader = true;
        for (Vertex u = 0; u < v && leader; ++u) leader = removed[u] || !reach[u][v];
        if (leader) ++count;
    }
    return count;
}

// Vertices whose removal increases the number of components.
inline std::vector<Vertex> brute_cut_vertices(const Graph& g) {
    const std::size_t base = brute_component_count(g);
    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> removed(g.vertex_count(), false);
        removed[v] = true;
        if (brute_component_count(g, removed) > base) cuts.push_back(v);
    }
    return cuts;
}

// P_G computed from reachability in G with v's edges dropped.
inline PartitionFamily brute_family(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Partition> parts;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Edge> kept;
        for (const auto& [a, b] : g.edges())
            if (a != v && b != v) kept.emplace_back(a, b);
        const auto reach = reachability(make_graph(n, kept));
        std::vector<VertexSet> blocks;
        for (Vertex x = 0; x < n; ++x) {
            bool leader = true;
            for (Vertex y = 0; y < x && leader; ++y) leader = !reach[y][x];
            if (!leader) continue;
            std::vector<Vertex> members;
            for (Vertex y = 0; y < n; ++y)
                if (reach[x][y]) members.push_back(y);
            blocks.emplace_back(members);
        }
        parts.push_back(Partition::from_blocks(n, blocks));
    }
    return PartitionFamily(n, std::move(parts));
}

// Labeled connected graphs: c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2).
inline std::vector<std::uint64_t> labeled_connected_counts(std::size_t max_n) {
    auto binom = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    auto all = [](std::uint64_t m) { return std::uint64_t{1} << (m * (m - 1) / 2); };
    std::vector<std::uint64_t> c(max_n + 1, 0);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::uint64_t disconnected = 0;
        for (std::size_t k = 1; k < n; ++k) disconnected += binom(n - 1, k - 1) * c[k] * all(n - k);
        c[n] = all(n) - disconnected;
    }
    return c;
}

// All partitions of `rest`, each extended by the singleton {v}.
inline void partitions_with_singleton(std::size_t n, Vertex v, std::vector<Partition>& out) {
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < n; ++x)
        if (x != v) rest.push_back(x);
    std::vector<std::vector<Vertex>> blocks;
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == rest.size()) {
            std::vector<VertexSet> sets{VertexSet::singleton(v)};
            for (const auto& b : blocks) sets.emplace_back(b);
            out.push_back(Partition::from_blocks(n, sets));
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(rest[i]);
            self(self, i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({rest[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    place(place, 0);
}

} // namespace blockgraph::testing

#endif
