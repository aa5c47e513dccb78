#include "blockgraph/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "blockgraph/block_closure.hpp"

namespace blockgraph::oracle {

namespace {

std::string path_string(const std::vector<Vertex>& path) {
    std::string out = "(";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(path[i]);
    }
    return out + ")";
}

std::string graph_string(const Graph& graph) {
    std::ostringstream out;
    out << "n=" << graph.vertex_count() << " edges=[";
    bool first = true;
    for (const auto& [u, v] : graph.edges()) {
        if (!first) out << ' ';
        first = false;
        out << u << '-' << v;
    }
    out << ']';
    return out.str();
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Interior vertex sets (as bitmasks) of all simple u-v paths.
std::vector<std::uint64_t> path_interiors(const Graph& graph, Vertex u, Vertex v) {
    std::set<std::uint64_t> interiors;
    std::uint64_t on_path = std::uint64_t{1} << u;
    std::function<void(Vertex)> extend = [&](Vertex at) {
        for (Vertex next : graph.neighbors(at)) {
            if (next == v) {
                interiors.insert(on_path & ~(std::uint64_t{1} << u));
                continue;
            }
            const std::uint64_t bit = std::uint64_t{1} << next;
            if (on_path & bit) continue;
            on_path |= bit;
            extend(next);
            on_path &= ~bit;
        }
    };
    extend(u);
    return {interiors.begin(), interiors.end()};
}

bool on_common_circuit(const Graph& graph, Vertex u, Vertex v) {
    const auto interiors = path_interiors(graph, u, v);
    for (std::size_t i = 0; i < interiors.size(); ++i) {
        for (std::size_t j = i + 1; j < interiors.size(); ++j) {
            if ((interiors[i] & interiors[j]) == 0) return true;
        }
    }
    return false;
}

CheckReport fail(const Graph& graph, Identity identity, std::string witness) {
    return {graph, identity, graph_string(graph) + ": " + witness};
}

} // namespace

Graph circuit_closure_oracle(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n > 64) throw std::invalid_argument("circuit_closure_oracle: at most 64 vertices supported");
    std::vector<Edge> edges = graph.edges();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!graph.has_edge(u, v) && on_common_circuit(graph, u, v)) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

Graph graph_from_edge_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (code >> bit & 1U) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

std::uint64_t edge_code(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    if (pair_count(n) > 64) throw std::invalid_argument("edge_code: graph too large to encode");
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (graph.has_edge(u, v)) code |= std::uint64_t{1} << bit;
        }
    }
    return code;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(std::size_t n) : n_(n) {
    if (n < 1 || n > max_vertices) {
        throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(max_vertices) + ", got " +
                                    std::to_string(n));
    }
    limit_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
    while (code_ < limit_) {
        Graph g = graph_from_edge_code(n_, code_++);
        if (is_connected(g)) return g;
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
    std::vector<Graph> graphs;
    ConnectedGraphEnumerator stream(n);
    while (auto g = stream.next()) graphs.push_back(std::move(*g));
    return graphs;
}

Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density_dist(0.1, 0.9);
    const double density = density_dist(rng);
    std::bernoulli_distribution coin(density);
    while (true) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g = make_graph(n, edges);
        if (is_connected(g)) return g;
    }
}

std::string_view identity_tag(Identity identity) {
    switch (identity) {
    case Identity::closure_vs_circuit: return "closure-vs-circuit";
    case Identity::compatibility: return "compatibility";
    case Identity::bp_vs_closure: return "B_PG-vs-[G]";
    case Identity::family_roundtrip: return "P_BP-vs-P";
    case Identity::minimal_vs_definitional: return "minimal-vs-definitional";
    case Identity::ternary_roundtrip: return "ternary-roundtrip";
    case Identity::lemma_equivalence: return "lemma-equivalence";
    case Identity::chain_path: return "chain-path";
    }
    return "unknown";
}

std::optional<std::string> chain_path_defect(const CompatibleFamily& family, const Graph& bp, Vertex u, Vertex v,
                                             const std::vector<Vertex>& path) {
    const std::size_t n = family.size();
    const std::string where = "chain_path(" + std::to_string(u) + "," + std::to_string(v) + ")=" + path_string(path);
    if (path.size() < 2 || path.front() != u || path.back() != v) return where + " has wrong endpoints";
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!bp.has_edge(path[i], path[i + 1])) {
            return where + " uses non-edge {" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + "}";
        }
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        if (!separates(family.family(), u, path[j], v)) {
            return where + ": interior vertex " + std::to_string(path[j]) + " does not separate the endpoints";
        }
        if (!family.cell(u, v).contains(path[j]) || !family.cell(v, u).contains(path[j])) {
            return where + ": interior vertex " + std::to_string(path[j]) + " outside p_u[v] ∩ p_v[u]";
        }
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        if (!family.cell(path[j], u).is_proper_subset_of(family.cell(path[j + 1], u))) {
            return where + ": chain sets not strictly nested at position " + std::to_string(j);
        }
    }
    // Maximality: no p_w[u] below the first set or strictly between neighbours.
    const VertexSet& top = family.cell(v, u);
    for (Vertex w = 0; w < n; ++w) {
        if (w == u || !family.cell(w, u).is_subset_of(top)) continue;
        const VertexSet& set = family.cell(w, u);
        if (set.is_proper_subset_of(family.cell(path[1], u))) {
            return where + ": chain extends below its first set via witness " + std::to_string(w);
        }
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            if (family.cell(path[j], u).is_proper_subset_of(set) &&
                set.is_proper_subset_of(family.cell(path[j + 1], u))) {
                return where + ": chain not maximal, witness " + std::to_string(w) + " fits between positions";
            }
        }
    }
    return std::nullopt;
}

CheckReport roundtrip_check(const Graph& graph) {
    if (!is_connected(graph)) throw std::invalid_argument("roundtrip_check: graph not connected");
    const std::size_t n = graph.vertex_count();

    const Graph closure = block_closure(graph);
    const Graph circuit = circuit_closure_oracle(graph);
    if (closure != circuit) {
        return fail(graph, Identity::closure_vs_circuit,
                    "block_closure " + graph_string(closure) + " vs oracle " + graph_string(circuit));
    }

    const PartitionFamily family = family_from_graph(graph);
    const auto report = validate_family(family);
    if (!report.ok()) return fail(graph, Identity::compatibility, report.violations.front().describe());
    const auto compatible = CompatibleFamily::check(family);

    const Graph bp = edges_from_family(compatible);
    if (bp != closure) {
        return fail(graph, Identity::bp_vs_closure, "B_P " + graph_string(bp) + " vs [G] " + graph_string(closure));
    }

    const PartitionFamily back = family_from_graph(bp);
    if (back != family || family_from_graph(closure) != family) {
        return fail(graph, Identity::family_roundtrip, "P_{B_P}=" + back.to_string() + " vs P=" + family.to_string());
    }

    const Graph minimal = edges_from_family_minimal(compatible);
    if (minimal != bp) {
        return fail(graph, Identity::minimal_vs_definitional,
                    "minimal " + graph_string(minimal) + " vs definitional " + graph_string(bp));
    }

    const auto relation = encode_ternary(compatible);
    try {
        if (decode_ternary(relation) != family) {
            return fail(graph, Identity::ternary_roundtrip, "decoded family differs from " + family.to_string());
        }
    } catch (const std::invalid_argument& e) {
        return fail(graph, Identity::ternary_roundtrip, e.what());
    }

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w = 0; w < n; ++w) {
                if (u == v || v == w || u == w) continue;
                const auto a = lemma_assertion_vector(compatible, u, v, w);
                const bool uniform = std::all_of(a.begin(), a.begin() + 9, [&](bool b) { return b == a[0]; });
                if (!uniform || (a[0] && !a[9])) {
                    std::string bits;
                    for (bool b : a) bits += b ? '1' : '0';
                    return fail(graph, Identity::lemma_equivalence,
                                "(u,v,w)=(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) +
                                    ") assertions " + bits);
                }
            }
        }
    }

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            std::vector<Vertex> path;
            try {
                path = chain_path(compatible, u, v);
            } catch (const std::logic_error& e) {
                return fail(graph, Identity::chain_path, e.what());
            }
            if (auto defect = chain_path_defect(compatible, bp, u, v, path)) {
                return fail(graph, Identity::chain_path, *defect);
            }
        }
    }
    return {graph, std::nullopt, std::nullopt};
}

CountPair count_correspondence(std::size_t n) {
    if (n < 1 || n > 6) throw std::invalid_argument("count_correspondence supports 1 <= n <= 6");
    CountPair counts;
    std::set<PartitionFamily> families;
    ConnectedGraphEnumerator stream(n);
    while (auto g = stream.next()) {
        if (is_block_graph(*g)) ++counts.block_graphs;
        families.insert(family_from_graph(*g));
    }
    counts.families = families.size();
    return counts;
}

SweepResult check_exhaustive(std::size_t n, unsigned threads) {
    if (n < 1 || n > ConnectedGraphEnumerator::max_vertices) {
        throw std::invalid_argument("check_exhaustive supports 1 <= n <= " +
                                    std::to_string(ConnectedGraphEnumerator::max_vertices));
    }
    threads = std::max(1U, threads);
    const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
    std::vector<SweepResult> partial(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                SweepResult& mine = partial[t];
                for (std::uint64_t code = t; code < limit; code += threads) {
                    Graph g = graph_from_edge_code(n, code);
                    if (!is_connected(g)) continue;
                    ++mine.checked;
                    auto report = roundtrip_check(g);
                    if (report.ok()) {
                        ++mine.passed;
                    } else if (!mine.first_failure) {
                        mine.first_failure = std::move(report);
                    }
                }
            });
        }
    }
    SweepResult merged;
    merged.n = n;
    for (auto& p : partial) {
        merged.checked += p.checked;
        merged.passed += p.passed;
        if (p.first_failure &&
            (!merged.first_failure || edge_code(p.first_failure->graph) < edge_code(merged.first_failure->graph))) {
            merged.first_failure = std::move(p.first_failure);
        }
    }
    return merged;
}

SweepResult check_sampled(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("check_sampled: n must be positive");
    std::mt19937_64 rng(seed);
    SweepResult result;
    result.n = n;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Graph g = random_connected_graph(n, rng);
        ++result.checked;
        auto report = roundtrip_check(g);
        if (report.ok()) {
            ++result.passed;
        } else if (!result.first_failure) {
            result.first_failure = std::move(report);
        }
    }
    return result;
}

std::vector<GoldenRow> read_golden(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file " + path.string());
    std::vector<GoldenRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        GoldenRow row{};
        std::string rest;
        if (!(fields >> row.n >> row.counts.block_graphs >> row.counts.families) || (fields >> rest)) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": malformed golden row");
        }
        rows.push_back(row);
    }
    return rows;
}

void write_golden(const std::filesystem::path& path, const std::vector<GoldenRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write golden file " + path.string());
    for (const auto& row : rows) {
        out << row.n << '\t' << row.counts.block_graphs << '\t' << row.counts.families << '\n';
    }
}

GoldenStatus reconcile_golden(const std::filesystem::path& path, const std::vector<GoldenRow>& rows) {
    if (!std::filesystem::exists(path)) {
        write_golden(path, rows);
        return GoldenStatus::written;
    }
    auto recorded = read_golden(path);
    bool extended = false;
    for (const auto& row : rows) {
        auto it = std::find_if(recorded.begin(), recorded.end(), [&](const GoldenRow& r) { return r.n == row.n; });
        if (it == recorded.end()) {
            recorded.push_back(row);
            extended = true;
        } else if (*it != row) {
            return GoldenStatus::mismatched;
        }
    }
    if (!extended) return GoldenStatus::matched;
    std::sort(recorded.begin(), recorded.end(), [](const GoldenRow& a, const GoldenRow& b) { return a.n < b.n; });
    write_golden(path, recorded);
    return GoldenStatus::written;
}

} // namespace blockgraph::oracle
