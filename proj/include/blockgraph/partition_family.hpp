#ifndef BLOCKGRAPH_PARTITION_FAMILY_HPP
#define BLOCKGRAPH_PARTITION_FAMILY_HPP

#include <array>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockgraph/graph.hpp"

namespace blockgraph {

// A vertex-indexed family (p_v) of partitions of {0,...,n-1}. Nothing beyond
// partition validity is enforced here; see validate_family.
class PartitionFamily {
public:
    PartitionFamily() = default;
    // Throws std::invalid_argument unless there are n parts, each a
    // partition of {0,...,n-1}.
    PartitionFamily(std::size_t n, std::vector<Partition> parts);

    std::size_t size() const { return parts_.size(); }
    const Partition& part(Vertex v) const { return parts_.at(v); }
    std::span<const Partition> parts() const { return parts_; }
    // p_v[u]
    const VertexSet& cell(Vertex v, Vertex u) const { return parts_.at(v).block_of(u); }

    std::string to_string() const;

    friend bool operator==(const PartitionFamily&, const PartitionFamily&) = default;
    friend auto operator<=>(const PartitionFamily&, const PartitionFamily&) = default;

private:
    std::vector<Partition> parts_;
};

struct Violation {
    enum class Kind { singleton, union_cover };

    Kind kind;
    Vertex u;  // for singleton: the vertex v with {v} not in p_v
    Vertex v;  // unused for singleton
    VertexSet first;   // p_v[v] for singleton, p_u[v] for union
    VertexSet second;  // empty for singleton, p_v[u] for union

    // One line, e.g. "union violation at (0,1): p_0[1] ∪ p_1[0] = {0,1} != V".
    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_family(const PartitionFamily& family);

class IncompatibleFamily : public std::invalid_argument {
public:
    explicit IncompatibleFamily(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// A family that has passed validate_family. Operations that rely on
// compatibility take this type; the PartitionFamily overloads validate
// first and throw IncompatibleFamily.
class CompatibleFamily {
public:
    static CompatibleFamily check(PartitionFamily family);

    const PartitionFamily& family() const { return family_; }
    std::size_t size() const { return family_.size(); }
    const VertexSet& cell(Vertex v, Vertex u) const { return family_.cell(v, u); }

    friend bool operator==(const CompatibleFamily&, const CompatibleFamily&) = default;

private:
    explicit CompatibleFamily(PartitionFamily family) : family_(std::move(family)) {}
    PartitionFamily family_;
};

// P_G = (pi_0(G^(v)))_v. Throws std::invalid_argument for disconnected G.
PartitionFamily family_from_graph(const Graph& graph);

// u|w|v: w differs from u and v and p_w[u] != p_w[v].
bool separates(const PartitionFamily& family, Vertex u, Vertex w, Vertex v);

// Entries 0..8 are the nine equivalent conditions on (u, v, w), entry 9 is
// the weaker consequence w in p_v[u] ∩ p_u[v].
using LemmaAssertions = std::array<bool, 10>;

LemmaAssertions lemma_assertion_vector(const CompatibleFamily& family, Vertex u, Vertex v, Vertex w);
LemmaAssertions lemma_assertion_vector(const PartitionFamily& family, Vertex u, Vertex v, Vertex w);

// B_P: {u,v} is an edge iff no third vertex separates u and v.
Graph edges_from_family(const CompatibleFamily& family);
Graph edges_from_family(const PartitionFamily& family);

// Same graph via minimality: {u,v} is an edge iff p_v[u] is inclusion-minimal
// among {p_w[u] : w != u}.
Graph edges_from_family_minimal(const CompatibleFamily& family);
Graph edges_from_family_minimal(const PartitionFamily& family);

// Path u = u_0, u_1, ..., u_k = v in B_P whose sets p_{u_1}[u] ⊊ ... ⊊ p_{u_k}[u]
// form a maximal chain among the p_w[u] contained in p_v[u]. Each step takes
// a minimal strictly larger set; ties go to the smallest witness vertex.
std::vector<Vertex> chain_path(const CompatibleFamily& family, Vertex u, Vertex v);
std::vector<Vertex> chain_path(const PartitionFamily& family, Vertex u, Vertex v);

using Triple = std::array<Vertex, 3>;

// The separation relation; (u, w, v) stands for u|w|v.
struct TernaryRelation {
    std::size_t n = 0;
    std::set<Triple> triples;

    bool holds(Vertex u, Vertex w, Vertex v) const { return triples.contains(Triple{u, w, v}); }

    friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;
};

TernaryRelation encode_ternary(const CompatibleFamily& family);
TernaryRelation encode_ternary(const PartitionFamily& family);

// Rebuilds p_v[u] as {w != v : not u|v|w}. Throws std::invalid_argument when
// the relation is malformed or does not come from a compatible family.
PartitionFamily decode_ternary(const TernaryRelation& relation);

} // namespace blockgraph

#endif
