#include "blockgraph/documents.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "blockgraph/block_closure.hpp"

namespace blockgraph {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string block_color(std::size_t index) {
    // Golden-ratio hue steps keep neighbouring block indices far apart.
    const double hue = std::fmod(static_cast<double>(index) * 0.618033988749895, 1.0);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f 0.650 0.850", hue);
    return buffer;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> n;
    std::size_t expected = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        const std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;

        const auto tokens = split_whitespace(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two integers, found " + std::to_string(tokens.size()) + " fields");
        }
        const std::size_t a = parse_count(tokens[0], line_no);
        const std::size_t b = parse_count(tokens[1], line_no);
        if (!n) {
            if (a == 0) throw ParseError(line_no, "vertex count must be at least 1");
            n = a;
            expected = b;
            continue;
        }
        if (edges.size() == expected) {
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(expected));
        }
        const std::string pair = std::to_string(a) + " " + std::to_string(b);
        if (a == b) throw ParseError(line_no, "self-loop '" + pair + "'");
        if (a > b) throw ParseError(line_no, "edge '" + pair + "' must be written with u < v");
        if (b >= *n) throw ParseError(line_no, "edge '" + pair + "' out of range for n=" + std::to_string(*n));
        if (!seen.emplace(a, b).second) throw ParseError(line_no, "duplicate edge '" + pair + "'");
        edges.emplace_back(a, b);
    }
    if (!n) throw ParseError(0, "missing 'n m' header");
    if (edges.size() != expected) {
        throw ParseError(0, "header declares " + std::to_string(expected) + " edges, found " +
                                std::to_string(edges.size()));
    }
    return make_graph(*n, edges);
}

std::string write_edge_list(const Graph& graph) {
    std::string out = std::to_string(graph.vertex_count()) + " " + std::to_string(graph.edge_count()) + "\n";
    for (const auto& [u, v] : graph.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

PartitionFamily parse_family_document(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t line = e.byte == 0 ? 0 : line_of_offset(text, e.byte - 1);
        std::string message = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
        if (auto pos = message.find("] "); pos != std::string::npos) message = message.substr(pos + 2);
        throw ParseError(line, "invalid JSON: " + message);
    }
    if (!doc.is_object()) throw ParseError(0, "family document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "parts") throw ParseError(0, "unknown field '" + key + "'");
    }
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw ParseError(0, "field 'n' must be a non-negative integer");
    }
    const auto n = doc["n"].get<std::size_t>();
    if (n == 0) throw ParseError(0, "field 'n' must be at least 1");
    if (!doc.contains("parts") || !doc["parts"].is_array()) throw ParseError(0, "field 'parts' must be an array");
    const json& parts_json = doc["parts"];
    if (parts_json.size() != n) {
        throw ParseError(0, "'parts' has " + std::to_string(parts_json.size()) + " entries, expected n=" +
                                std::to_string(n));
    }

    std::vector<Partition> parts;
    parts.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::string where = "parts[" + std::to_string(v) + "]";
        const json& part = parts_json[v];
        if (!part.is_array()) throw ParseError(0, where + " must be an array of blocks");
        std::vector<VertexSet> blocks;
        for (std::size_t b = 0; b < part.size(); ++b) {
            const json& block = part[b];
            const std::string block_where = where + "[" + std::to_string(b) + "]";
            if (!block.is_array()) throw ParseError(0, block_where + " must be an array of vertices");
            std::vector<Vertex> members;
            for (const json& x : block) {
                if (!x.is_number_unsigned()) throw ParseError(0, block_where + " holds a non-vertex value");
                members.push_back(x.get<Vertex>());
            }
            VertexSet set(members);
            if (set.size() != members.size()) throw ParseError(0, block_where + " repeats a vertex");
            blocks.push_back(std::move(set));
        }
        try {
            parts.push_back(Partition::from_blocks(n, std::move(blocks)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, where + ": " + e.what());
        }
    }
    return PartitionFamily(n, std::move(parts));
}

std::string write_family_document(const PartitionFamily& family) {
    std::ostringstream out;
    out << "{\n  \"n\": " << family.size() << ",\n  \"parts\": [\n";
    for (std::size_t v = 0; v < family.size(); ++v) {
        out << "    [";
        const auto blocks = family.part(v).blocks();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (b != 0) out << ", ";
            out << '[';
            bool first = true;
            for (Vertex x : blocks[b]) {
                if (!first) out << ", ";
                first = false;
                out << x;
            }
            out << ']';
        }
        out << ']' << (v + 1 == family.size() ? "\n" : ",\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string write_dot(const Graph& graph, bool highlight_blocks) {
    std::ostringstream out;
    out << "graph G {\n";
    if (!highlight_blocks) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v) out << "  " << v << ";\n";
        for (const auto& [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    const auto decomposition = biconnected_blocks(graph);
    std::vector<std::size_t> home(graph.vertex_count(), 0);
    for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
        for (Vertex v : decomposition.blocks[b]) home[v] = b;
    }
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v;
        if (decomposition.cut_vertices.contains(v)) {
            out << " [shape=doublecircle];\n";
        } else {
            out << " [shape=circle, color=\"" << block_color(home[v]) << "\"];\n";
        }
    }
    for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
        const auto members = decomposition.blocks[b].members();
        out << "  // block " << b << ": " << decomposition.blocks[b].to_string() << "\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (graph.has_edge(members[i], members[j])) {
                    out << "  " << members[i] << " -- " << members[j] << " [color=\"" << block_color(b)
                        << "\"];\n";
                }
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace blockgraph
