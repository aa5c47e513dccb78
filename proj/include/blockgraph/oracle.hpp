#ifndef BLOCKGRAPH_ORACLE_HPP
#define BLOCKGRAPH_ORACLE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/graph.hpp"
#include "blockgraph/partition_family.hpp"

namespace blockgraph::oracle {

// [E] straight from the definition: E plus every pair joined by two internally
// vertex-disjoint paths. Paths are enumerated by DFS and compared as interior
// bitmasks; nothing is shared with the lowpoint decomposition. Exponential,
// meant for n <= 8. Throws std::invalid_argument for n > 64.
Graph circuit_closure_oracle(const Graph& graph);

// Bit i of the code is edge number i in the order (0,1),(0,2),...,(0,n-1),(1,2),...
Graph graph_from_edge_code(std::size_t n, std::uint64_t code);
std::uint64_t edge_code(const Graph& graph);

// Streams every labeled connected graph on n vertices exactly once, in
// increasing edge-code order.
class ConnectedGraphEnumerator {
public:
    static constexpr std::size_t max_vertices = 7;

    // Throws std::invalid_argument unless 1 <= n <= max_vertices.
    explicit ConnectedGraphEnumerator(std::size_t n);

    std::optional<Graph> next();

private:
    std::size_t n_;
    std::uint64_t code_ = 0;
    std::uint64_t limit_;
};

std::vector<Graph> enumerate_connected_graphs(std::size_t n);

// Uniform edge density drawn per sample, then rejection until connected.
Graph random_connected_graph(std::size_t n, std::mt19937_64& rng);

enum class Identity {
    closure_vs_circuit,
    compatibility,
    bp_vs_closure,
    family_roundtrip,
    minimal_vs_definitional,
    ternary_roundtrip,
    lemma_equivalence,
    chain_path,
};

std::string_view identity_tag(Identity identity);

struct CheckReport {
    Graph graph;
    std::optional<Identity> failed_identity;
    std::optional<std::string> witness;

    bool ok() const { return !failed_identity.has_value(); }
};

// Independent validation of a chain_path result; returns a description of the
// first defect, if any.
std::optional<std::string> chain_path_defect(const CompatibleFamily& family, const Graph& bp, Vertex u, Vertex v,
                                             const std::vector<Vertex>& path);

// Every identity of the bijection on one connected graph. Throws
// std::invalid_argument for disconnected input.
CheckReport roundtrip_check(const Graph& graph);

struct CountPair {
    std::uint64_t block_graphs = 0;
    std::uint64_t families = 0;

    friend bool operator==(const CountPair&, const CountPair&) = default;
};

// (connected block graphs on n labeled vertices, distinct P_G over connected G).
// Throws std::invalid_argument unless 1 <= n <= 6.
CountPair count_correspondence(std::size_t n);

struct SweepResult {
    std::size_t n = 0;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::optional<CheckReport> first_failure;
};

// roundtrip_check over every connected graph on n vertices. Work is split
// across threads; the reported failure is the one with the smallest edge code.
SweepResult check_exhaustive(std::size_t n, unsigned threads = 1);
SweepResult check_sampled(std::size_t n, std::uint64_t samples, std::uint64_t seed);

// Golden counts file: one "n<TAB>block_graphs<TAB>families" line per n.
struct GoldenRow {
    std::size_t n;
    CountPair counts;

    friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

std::vector<GoldenRow> read_golden(const std::filesystem::path& path);
void write_golden(const std::filesystem::path& path, const std::vector<GoldenRow>& rows);

enum class GoldenStatus { written, matched, mismatched };

// Rows for an n already on file must match it; rows for a new n are added
// to the file (status written).
GoldenStatus reconcile_golden(const std::filesystem::path& path, const std::vector<GoldenRow>& rows);

} // namespace blockgraph::oracle

#endif
