#include "blockgraph/partition_family.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace blockgraph {

namespace {

void require_vertex(std::size_t n, Vertex v, const char* what) {
    if (v >= n) {
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n));
    }
}

std::string cell_name(Vertex v, Vertex u) {
    return "p_" + std::to_string(v) + "[" + std::to_string(u) + "]";
}

std::string summarize(const ValidationReport& report) {
    std::string message = "family is not compatible";
    for (const auto& violation : report.violations) message += "; " + violation.describe();
    return message;
}

} // namespace

PartitionFamily::PartitionFamily(std::size_t n, std::vector<Partition> parts) : parts_(std::move(parts)) {
    if (parts_.size() != n) {
        throw std::invalid_argument("family over n=" + std::to_string(n) + " needs " + std::to_string(n) +
                                    " partitions, got " + std::to_string(parts_.size()));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (parts_[v].ground_size() != n) {
            throw std::invalid_argument("p_" + std::to_string(v) + " partitions " +
                                        std::to_string(parts_[v].ground_size()) + " vertices, expected " +
                                        std::to_string(n));
        }
    }
}

std::string PartitionFamily::to_string() const {
    std::string out;
    for (std::size_t v = 0; v < parts_.size(); ++v) {
        out += "p_" + std::to_string(v) + "=" + parts_[v].to_string();
        if (v + 1 != parts_.size()) out += ' ';
    }
    return out;
}

std::string Violation::describe() const {
    if (kind == Kind::singleton) {
        return "singleton violation at " + std::to_string(u) + ": " + cell_name(u, u) + " = " + first.to_string() +
               " is not {" + std::to_string(u) + "}";
    }
    return "union violation at (" + std::to_string(u) + "," + std::to_string(v) + "): " + cell_name(u, v) + " ∪ " +
           cell_name(v, u) + " = " + first.set_union(second).to_string() + " != V";
}

ValidationReport validate_family(const PartitionFamily& family) {
    ValidationReport report;
    const std::size_t n = family.size();
    for (Vertex v = 0; v < n; ++v) {
        const VertexSet& own = family.cell(v, v);
        if (own.size() != 1) {
            report.violations.push_back({Violation::Kind::singleton, v, v, own, {}});
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const VertexSet& a = family.cell(u, v);
            const VertexSet& b = family.cell(v, u);
            // |a ∪ b| = n, counted without materializing the union.
            if (a.size() + b.size() - a.set_intersection(b).size() != n) {
                report.violations.push_back({Violation::Kind::union_cover, u, v, a, b});
            }
        }
    }
    return report;
}

IncompatibleFamily::IncompatibleFamily(ValidationReport report)
    : std::invalid_argument(summarize(report)), report_(std::move(report)) {}

CompatibleFamily CompatibleFamily::check(PartitionFamily family) {
    auto report = validate_family(family);
    if (!report.ok()) throw IncompatibleFamily(std::move(report));
    return CompatibleFamily(std::move(family));
}

PartitionFamily family_from_graph(const Graph& graph) {
    if (!is_connected(graph)) throw std::invalid_argument("graph not connected");
    const std::size_t n = graph.vertex_count();
    std::vector<Partition> parts;
    parts.reserve(n);
    for (Vertex v = 0; v < n; ++v) parts.push_back(connected_components(vertex_deleted_subgraph(graph, v)));
    return PartitionFamily(n, std::move(parts));
}

bool separates(const PartitionFamily& family, Vertex u, Vertex w, Vertex v) {
    const std::size_t n = family.size();
    require_vertex(n, u, "separates");
    require_vertex(n, w, "separates");
    require_vertex(n, v, "separates");
    if (w == u || w == v || u == v) return false;
    return !family.part(w).same_block(u, v);
}

LemmaAssertions lemma_assertion_vector(const CompatibleFamily& family, Vertex u, Vertex v, Vertex w) {
    const std::size_t n = family.size();
    require_vertex(n, u, "lemma_assertion_vector");
    require_vertex(n, v, "lemma_assertion_vector");
    require_vertex(n, w, "lemma_assertion_vector");
    if (u == v || v == w || u == w) {
        throw std::invalid_argument("lemma_assertion_vector: u, v, w must be pairwise distinct");
    }
    const VertexSet& wu = family.cell(w, u);
    const VertexSet& wv = family.cell(w, v);
    const VertexSet& vw = family.cell(v, w);
    const VertexSet& vu = family.cell(v, u);
    const VertexSet& uw = family.cell(u, w);
    const VertexSet& uv = family.cell(u, v);
    return {
        wu != wv,
        wu.is_proper_subset_of(vw),
        wu.is_proper_subset_of(vu),
        wu.is_subset_of(vu),
        !wu.contains(v),
        wv.is_proper_subset_of(uw),
        wv.is_proper_subset_of(uv),
        wv.is_subset_of(uv),
        !wv.contains(u),
        vu.contains(w) && uv.contains(w),
    };
}

LemmaAssertions lemma_assertion_vector(const PartitionFamily& family, Vertex u, Vertex v, Vertex w) {
    return lemma_assertion_vector(CompatibleFamily::check(family), u, v, w);
}

Graph edges_from_family(const CompatibleFamily& compatible) {
    const auto& family = compatible.family();
    const std::size_t n = family.size();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool separated = false;
            for (Vertex w = 0; w < n && !separated; ++w) {
                separated = w != u && w != v && !family.part(w).same_block(u, v);
            }
            if (!separated) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

Graph edges_from_family(const PartitionFamily& family) {
    return edges_from_family(CompatibleFamily::check(family));
}

Graph edges_from_family_minimal(const CompatibleFamily& family) {
    const std::size_t n = family.size();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (v == u) continue;
            const VertexSet& candidate = family.cell(v, u);
            bool minimal = true;
            for (Vertex w = 0; w < n && minimal; ++w) {
                minimal = w == u || !family.cell(w, u).is_proper_subset_of(candidate);
            }
            if (minimal) edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return make_graph(n, edges);
}

Graph edges_from_family_minimal(const PartitionFamily& family) {
    return edges_from_family_minimal(CompatibleFamily::check(family));
}

std::vector<Vertex> chain_path(const CompatibleFamily& family, Vertex u, Vertex v) {
    const std::size_t n = family.size();
    require_vertex(n, u, "chain_path");
    require_vertex(n, v, "chain_path");
    if (u == v) throw std::invalid_argument("chain_path: endpoints must differ");

    // P^{⊆ p_v[u]}[u], keyed by witness.
    const VertexSet& top = family.cell(v, u);
    std::vector<Vertex> witnesses;
    for (Vertex w = 0; w < n; ++w) {
        if (w != u && family.cell(w, u).is_subset_of(top)) witnesses.push_back(w);
    }
    std::map<VertexSet, Vertex> seen;
    for (Vertex w : witnesses) {
        auto [it, fresh] = seen.emplace(family.cell(w, u), w);
        if (!fresh) {
            throw std::logic_error("chain_path: " + cell_name(it->second, u) + " = " + cell_name(w, u) +
                                   " for distinct witnesses");
        }
    }

    std::vector<Vertex> path{u};
    std::optional<Vertex> current;
    while (!current || *current != v) {
        std::optional<Vertex> next;
        for (Vertex w : witnesses) {
            const VertexSet& set = family.cell(w, u);
            if (current && !family.cell(*current, u).is_proper_subset_of(set)) continue;
            // Minimal among the candidates: no candidate strictly inside it.
            bool minimal = true;
            for (Vertex x : witnesses) {
                const VertexSet& other = family.cell(x, u);
                if (current && !family.cell(*current, u).is_proper_subset_of(other)) continue;
                if (other.is_proper_subset_of(set)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                next = w;
                break;  // witnesses ascend, so this is the smallest index
            }
        }
        if (!next) throw std::logic_error("chain_path: chain stalled before reaching p_v[u]");
        current = next;
        path.push_back(*next);
    }
    return path;
}

std::vector<Vertex> chain_path(const PartitionFamily& family, Vertex u, Vertex v) {
    return chain_path(CompatibleFamily::check(family), u, v);
}

TernaryRelation encode_ternary(const CompatibleFamily& compatible) {
    const auto& family = compatible.family();
    TernaryRelation relation;
    relation.n = family.size();
    for (Vertex u = 0; u < relation.n; ++u) {
        for (Vertex w = 0; w < relation.n; ++w) {
            for (Vertex v = 0; v < relation.n; ++v) {
                if (separates(family, u, w, v)) relation.triples.insert(Triple{u, w, v});
            }
        }
    }
    return relation;
}

TernaryRelation encode_ternary(const PartitionFamily& family) {
    return encode_ternary(CompatibleFamily::check(family));
}

PartitionFamily decode_ternary(const TernaryRelation& relation) {
    const std::size_t n = relation.n;
    if (n == 0) throw std::invalid_argument("decode_ternary: relation over an empty vertex set");
    for (const auto& [u, w, v] : relation.triples) {
        const std::string name = "(" + std::to_string(u) + "," + std::to_string(w) + "," + std::to_string(v) + ")";
        if (u >= n || w >= n || v >= n) {
            throw std::invalid_argument("decode_ternary: triple " + name + " out of range");
        }
        if (u == w || w == v || u == v) {
            throw std::invalid_argument("decode_ternary: triple " + name + " has repeated entries");
        }
        if (!relation.holds(v, w, u)) {
            throw std::invalid_argument("decode_ternary: triple " + name + " present without its mirror");
        }
    }

    std::vector<Partition> parts;
    parts.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        std::set<VertexSet> distinct{VertexSet::singleton(v)};
        std::vector<VertexSet> cells(n);
        for (Vertex u = 0; u < n; ++u) {
            if (u == v) continue;
            std::vector<Vertex> members;
            for (Vertex w = 0; w < n; ++w) {
                if (w != v && !relation.holds(u, v, w)) members.push_back(w);
            }
            cells[u] = VertexSet(std::move(members));
            distinct.insert(cells[u]);
        }
        Partition part;
        try {
            part = Partition::from_blocks(n, std::vector<VertexSet>(distinct.begin(), distinct.end()));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("decode_ternary: reconstructed p_" + std::to_string(v) +
                                        " is not a partition: " + e.what());
        }
        for (Vertex u = 0; u < n; ++u) {
            if (u != v && part.block_of(u) != cells[u]) {
                throw std::invalid_argument("decode_ternary: reconstructed " + cell_name(v, u) +
                                            " is inconsistent with the relation");
            }
        }
        parts.push_back(std::move(part));
    }

    PartitionFamily family(n, std::move(parts));
    auto report = validate_family(family);
    if (!report.ok()) {
        throw std::invalid_argument("decode_ternary: reconstruction is not compatible: " +
                                    report.violations.front().describe());
    }
    if (encode_ternary(CompatibleFamily::check(family)) != relation) {
        throw std::invalid_argument("decode_ternary: relation does not come from a compatible family");
    }
    return family;
}

} // namespace blockgraph
