#include "balgraph/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "text_util.hpp"

namespace balgraph {

std::size_t MultiGraph::degree(VertexIndex v) const {
    std::size_t d = 0;
    for (const auto& inc : incident(v)) d += edges_[inc.edge].is_loop() ? 2 : 1;
    return d;
}

VertexIndex MultiGraph::find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    return it == vertex_lookup_.end() ? kNoVertex : it->second;
}

EdgeIndex MultiGraph::find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    return it == edge_lookup_.end() ? kNoEdge : it->second;
}

VertexIndex MultiGraph::vertex_index(std::string_view id) const {
    VertexIndex v = find_vertex(id);
    if (v == kNoVertex) throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
    return v;
}

EdgeIndex MultiGraph::edge_index(std::string_view id) const {
    EdgeIndex e = find_edge(id);
    if (e == kNoEdge) throw std::out_of_range("unknown edge '" + std::string(id) + "'");
    return e;
}

VertexIndex MultiGraph::Builder::add_vertex(std::string id) {
    if (g_.vertex_lookup_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
    auto v = static_cast<VertexIndex>(g_.vertex_ids_.size());
    g_.vertex_lookup_.emplace(id, v);
    g_.vertex_ids_.push_back(std::move(id));
    g_.adjacency_.emplace_back();
    return v;
}

EdgeIndex MultiGraph::Builder::add_edge(std::string id, std::string_view u, std::string_view w) {
    VertexIndex ui = g_.find_vertex(u);
    if (ui == kNoVertex) throw std::invalid_argument("endpoint '" + std::string(u) + "' is not a declared vertex");
    VertexIndex wi = g_.find_vertex(w);
    if (wi == kNoVertex) throw std::invalid_argument("endpoint '" + std::string(w) + "' is not a declared vertex");
    return add_edge(std::move(id), ui, wi);
}

EdgeIndex MultiGraph::Builder::add_edge(std::string id, VertexIndex u, VertexIndex w) {
    if (u >= g_.vertex_count() || w >= g_.vertex_count()) throw std::invalid_argument("endpoint out of range");
    if (g_.edge_lookup_.count(id)) throw std::invalid_argument("duplicate edge '" + id + "'");
    auto e = static_cast<EdgeIndex>(g_.edges_.size());
    g_.edge_lookup_.emplace(id, e);
    g_.edges_.push_back(EdgeRecord{std::move(id), u, w});
    g_.adjacency_[u].push_back({e, w});
    if (u != w) g_.adjacency_[w].push_back({e, u});
    return e;
}

bool MultiGraph::Builder::has_vertex(std::string_view id) const { return g_.find_vertex(id) != kNoVertex; }

MultiGraph MultiGraph::Builder::build() && { return std::move(g_); }

MultiGraph parse_graph(std::string_view text) {
    MultiGraph::Builder builder;
    std::size_t line_no = 0;
    for (const auto& line : detail::split_lines(text)) {
        ++line_no;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
                builder.add_vertex(tokens[1]);
            } else if (tokens[0] == "edge") {
                if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <id> <u> <w>'");
                builder.add_edge(tokens[1], tokens[2], tokens[3]);
            } else {
                throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(line_no, ex.what());
        }
    }
    return std::move(builder).build();
}

MultiGraph read_graph_file(const std::string& path) { return parse_graph(detail::read_file(path)); }

std::string to_text(const MultiGraph& g) {
    std::ostringstream out;
    for (const auto& id : g.vertex_ids()) out << "vertex " << id << '\n';
    for (const auto& e : g.edges()) out << "edge " << e.id << ' ' << g.vertex_id(e.u) << ' ' << g.vertex_id(e.w) << '\n';
    return out.str();
}

Ttrail make_ttrail(const MultiGraph& g, const std::vector<std::string>& vertex_ids,
                   const std::vector<std::string>& edge_ids, const std::string& terminal) {
    if (vertex_ids.size() != edge_ids.size())
        throw std::invalid_argument("a ttrail alternates vertices and edges; counts differ");
    Ttrail p;
    for (const auto& v : vertex_ids) p.vertices.push_back(g.vertex_index(v));
    for (const auto& e : edge_ids) p.edges.push_back(g.edge_index(e));
    p.terminal = terminal.empty() ? kNoVertex : g.vertex_index(terminal);
    return p;
}

std::string format_ttrail(const MultiGraph& g, const Ttrail& p) {
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) out += ',';
        out += g.vertex_id(p.vertices[i]) + ',' + g.edge(p.edges[i]).id;
    }
    out += " -> ";
    out += p.terminal == kNoVertex ? std::string("()") : g.vertex_id(p.terminal);
    return out;
}

ConcatResult ttrail_concat(const Ttrail& p, const Ttrail& q) {
    if (p.trivial()) return {q, true};
    if (q.trivial()) {
        if (q.terminal != kNoVertex && q.terminal != p.terminal)
            throw std::invalid_argument("ttrail_concat: p does not end where q starts");
        return {p, true};
    }
    if (p.terminal != q.start()) throw std::invalid_argument("ttrail_concat: p does not end where q starts");
    ConcatResult r{p, true};
    r.sequence.vertices.insert(r.sequence.vertices.end(), q.vertices.begin(), q.vertices.end());
    r.sequence.edges.insert(r.sequence.edges.end(), q.edges.begin(), q.edges.end());
    r.sequence.terminal = q.terminal;
    std::unordered_set<EdgeIndex> seen(p.edges.begin(), p.edges.end());
    r.is_ttrail = std::none_of(q.edges.begin(), q.edges.end(), [&](EdgeIndex e) { return seen.count(e) > 0; });
    return r;
}

Ttrail ttrail_inverse(const Ttrail& p) {
    if (p.trivial()) return p;
    Ttrail r;
    const std::size_t n = p.edges.size();
    r.vertices.reserve(n);
    r.vertices.push_back(p.terminal);
    for (std::size_t i = n - 1; i >= 1; --i) r.vertices.push_back(p.vertices[i]);
    r.edges.assign(p.edges.rbegin(), p.edges.rend());
    r.terminal = p.vertices.front();
    return r;
}

std::string_view to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::NotATtrail: return "not-a-ttrail";
        case SequenceKind::OpenTtrail: return "open-ttrail";
        case SequenceKind::ClosedTtrail: return "closed-ttrail";
        case SequenceKind::Cycle: return "cycle";
    }
    return "?";
}

SequenceKind classify_sequence(const MultiGraph& g, const Ttrail& seq) {
    for (auto v : seq.vertices)
        if (v >= g.vertex_count()) throw std::out_of_range("vertex index outside graph");
    for (auto e : seq.edges)
        if (e >= g.edge_count()) throw std::out_of_range("edge index outside graph");
    if (seq.terminal != kNoVertex && seq.terminal >= g.vertex_count())
        throw std::out_of_range("terminal vertex outside graph");

    if (seq.vertices.size() != seq.edges.size()) return SequenceKind::NotATtrail;
    if (seq.trivial()) return SequenceKind::Cycle;
    if (seq.terminal == kNoVertex) return SequenceKind::NotATtrail;

    const std::size_t n = seq.edges.size();
    std::vector<EdgeIndex> sorted_edges = seq.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
        return SequenceKind::NotATtrail;

    for (std::size_t j = 0; j < n; ++j) {
        const auto& rec = g.edge(seq.edges[j]);
        VertexIndex a = seq.vertices[j];
        VertexIndex b = j + 1 < n ? seq.vertices[j + 1] : seq.terminal;
        if (!((rec.u == a && rec.w == b) || (rec.u == b && rec.w == a))) return SequenceKind::NotATtrail;
    }
    if (seq.terminal != seq.vertices.front()) return SequenceKind::OpenTtrail;

    std::vector<VertexIndex> sorted_vertices = seq.vertices;
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
    if (std::adjacent_find(sorted_vertices.begin(), sorted_vertices.end()) != sorted_vertices.end())
        return SequenceKind::ClosedTtrail;
    return SequenceKind::Cycle;
}

}  // namespace balgraph
