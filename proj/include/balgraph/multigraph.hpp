#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace balgraph {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr VertexIndex kNoVertex = std::numeric_limits<VertexIndex>::max();

/// Raised by the text-format readers; carries the 1-based line of the offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct EdgeRecord {
    std::string id;
    VertexIndex u;
    VertexIndex w;

    bool is_loop() const noexcept { return u == w; }
    VertexIndex other(VertexIndex x) const noexcept { return x == u ? w : u; }
};

/// An incidence as seen from one vertex: the edge and the vertex at its far end.
struct Incidence {
    EdgeIndex edge;
    VertexIndex neighbor;
};

/// Undirected multigraph with loops and parallel edges.
///
/// Vertices and edges are kept in insertion order and addressed by dense
/// indices; every algorithm in the library iterates in that order, so results
/// are a deterministic function of the input file. Immutable once built.
class MultiGraph {
public:
    class Builder;

    MultiGraph() = default;

    std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
    const EdgeRecord& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }

    /// Incident edges of v in edge insertion order. A loop is listed once.
    const std::vector<Incidence>& incident(VertexIndex v) const { return adjacency_.at(v); }

    /// Degree with loops counted twice.
    std::size_t degree(VertexIndex v) const;

    VertexIndex find_vertex(std::string_view id) const;
    EdgeIndex find_edge(std::string_view id) const;
    VertexIndex vertex_index(std::string_view id) const;  // throws std::out_of_range
    EdgeIndex edge_index(std::string_view id) const;      // throws std::out_of_range

    static constexpr EdgeIndex kNoEdge = std::numeric_limits<EdgeIndex>::max();

private:
    std::vector<std::string> vertex_ids_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

class MultiGraph::Builder {
public:
    /// Throws std::invalid_argument on a duplicate id.
    VertexIndex add_vertex(std::string id);
    /// Throws std::invalid_argument on a duplicate edge id or an unknown endpoint.
    EdgeIndex add_edge(std::string id, std::string_view u, std::string_view w);
    EdgeIndex add_edge(std::string id, VertexIndex u, VertexIndex w);

    bool has_vertex(std::string_view id) const;
    MultiGraph build() &&;

private:
    MultiGraph g_;
};

/// Reads the line-oriented graph format (`vertex <id>`, `edge <id> <u> <w>`, `#` comments).
MultiGraph parse_graph(std::string_view text);
MultiGraph read_graph_file(const std::string& path);
/// Canonical text form; parse_graph(to_text(g)) reproduces g.
std::string to_text(const MultiGraph& g);

/// Truncated trail v1,e1,...,vn,en with the terminal vertex kept separately.
///
/// The trivial closed ttrail has no vertices and no edges; its terminal may be
/// kNoVertex or the vertex it is anchored at.
struct Ttrail {
    std::vector<VertexIndex> vertices;
    std::vector<EdgeIndex> edges;
    VertexIndex terminal = kNoVertex;

    bool trivial() const noexcept { return edges.empty(); }
    VertexIndex start() const noexcept { return vertices.empty() ? terminal : vertices.front(); }
    std::size_t size() const noexcept { return edges.size(); }

    friend bool operator==(const Ttrail&, const Ttrail&) = default;
};

/// Builds a ttrail from ids; throws std::out_of_range on unknown ids and
/// std::invalid_argument when the vertex and edge counts differ.
Ttrail make_ttrail(const MultiGraph& g, const std::vector<std::string>& vertex_ids,
                   const std::vector<std::string>& edge_ids, const std::string& terminal);

std::string format_ttrail(const MultiGraph& g, const Ttrail& p);

struct ConcatResult {
    Ttrail sequence;
    bool is_ttrail;  // false when p and q share an edge
};

/// p + q. Throws std::invalid_argument when p does not end where q starts.
ConcatResult ttrail_concat(const Ttrail& p, const Ttrail& q);
Ttrail ttrail_inverse(const Ttrail& p);

enum class SequenceKind { NotATtrail, OpenTtrail, ClosedTtrail, Cycle };

std::string_view to_string(SequenceKind kind);

/// Classifies an alternating sequence. Throws std::out_of_range for indices
/// outside the graph.
SequenceKind classify_sequence(const MultiGraph& g, const Ttrail& seq);

}  // namespace balgraph
